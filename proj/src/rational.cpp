#include "clusterweyl/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace cw {

RationalExpr::RationalExpr(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalExpr: division by zero");
  canonicalize();
}

void RationalExpr::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::constant(1);
    return;
  }
  // Clear the joint monomial content so num and den become coprime-by-
  // monomials polynomials with nonnegative exponents.
  Monomial shift;
  {
    std::vector<VarId> vars = num_.variables();
    std::vector<VarId> dv = den_.variables();
    vars.insert(vars.end(), dv.begin(), dv.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (VarId v : vars) {
      std::int32_t m = std::min(num_.min_exponent(v), den_.min_exponent(v));
      if (m != 0) shift.e.push_back({v, -m});
    }
  }
  if (!shift.is_one()) {
    num_ = num_.mul_monomial(shift);
    den_ = den_.mul_monomial(shift);
  }
  mpz_class gn = num_.content();
  mpz_class gd = den_.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), gn.get_mpz_t(), gd.get_mpz_t());
  if (g > 1) {
    num_.divide_content(g);
    den_.divide_content(g);
  }
  if (den_.leading().second < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalExpr RationalExpr::operator+(const RationalExpr& o) const {
  if (den_ == o.den_) return RationalExpr(num_ + o.num_, den_);
  return RationalExpr(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator-(const RationalExpr& o) const {
  if (den_ == o.den_) return RationalExpr(num_ - o.num_, den_);
  return RationalExpr(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalExpr RationalExpr::operator*(const RationalExpr& o) const {
  return RationalExpr(num_ * o.num_, den_ * o.den_);
}

RationalExpr RationalExpr::operator/(const RationalExpr& o) const {
  if (o.is_zero()) throw std::domain_error("RationalExpr: division by zero");
  return RationalExpr(num_ * o.den_, den_ * o.num_);
}

RationalExpr RationalExpr::operator-() const {
  RationalExpr r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalExpr RationalExpr::inverse() const {
  if (is_zero()) throw std::domain_error("RationalExpr: inverse of zero");
  return RationalExpr(den_, num_);
}

RationalExpr RationalExpr::pow(std::int32_t k) const {
  if (k == 0) return one();
  if (k < 0) return inverse().pow(-k);
  return RationalExpr(num_.pow(static_cast<std::uint32_t>(k)),
                      den_.pow(static_cast<std::uint32_t>(k)));
}

bool RationalExpr::equals(const RationalExpr& o) const {
  if (num_ == o.num_ && den_ == o.den_) return true;
  return num_ * o.den_ == o.num_ * den_;
}

RationalExpr RationalExpr::substitute(
    const std::map<VarId, RationalExpr>& map) const {
  auto sub_poly = [&map](const LaurentPoly& p) {
    RationalExpr acc = RationalExpr::zero();
    for (auto& [m, c] : p.terms()) {
      RationalExpr term = RationalExpr::constant(c);
      Monomial rest;
      for (auto& [v, k] : m.e) {
        auto it = map.find(v);
        if (it == map.end()) {
          rest.e.push_back({v, k});
        } else {
          term = term * it->second.pow(k);
        }
      }
      if (!rest.is_one()) term = term * RationalExpr::monomial(rest);
      acc = acc + term;
    }
    return acc;
  };
  RationalExpr dn = sub_poly(den_);
  if (dn.is_zero())
    throw std::domain_error("substitute: denominator vanishes");
  return sub_poly(num_) / dn;
}

RationalExpr RationalExpr::derivative(VarId v) const {
  // (n/d)' = (n' d - n d') / d^2
  return RationalExpr(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                      den_ * den_);
}

std::string RationalExpr::str() const {
  if (den_.is_constant() && !den_.is_zero() &&
      den_.leading().second == 1) {
    return num_.str();
  }
  std::string n = num_.str();
  std::string d = den_.str();
  std::string ln = num_.term_count() > 1 ? "(" + n + ")" : n;
  std::string ld = den_.term_count() > 1 ? "(" + d + ")" : d;
  return ln + "/" + ld;
}

}  // namespace cw
