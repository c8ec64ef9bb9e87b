#include "clusterweyl/factored.hpp"

#include <stdexcept>

namespace cw {

PolyRef PolyPool::intern(LaurentPoly poly) {
  std::size_t h = poly.hash();
  std::lock_guard<std::mutex> lock(mu_);
  auto range = table_.equal_range(h);
  for (auto it = range.first; it != range.second; ++it)
    if (*it->second == poly) return it->second;
  PolyRef ref = std::make_shared<const LaurentPoly>(std::move(poly));
  table_.emplace(h, ref);
  return ref;
}

FactoredExpr FactoredExpr::constant(const mpq_class& c) {
  if (c == 0) throw std::domain_error("FactoredExpr: zero");
  FactoredExpr r;
  r.coeff_ = c;
  return r;
}

FactoredExpr FactoredExpr::variable(VarId v, std::int32_t k) {
  FactoredExpr r;
  r.mono_ = Monomial::var(v, k);
  return r;
}

FactoredExpr FactoredExpr::from_poly(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("FactoredExpr: zero polynomial");
  FactoredExpr r;
  r.absorb_poly(p, 1);
  return r;
}

void FactoredExpr::push_factor(const PolyRef& f, std::int32_t e) {
  if (e == 0) return;
  auto it = facs_.find(f);
  if (it == facs_.end()) {
    facs_.emplace(f, e);
  } else {
    it->second += e;
    if (it->second == 0) facs_.erase(it);
  }
}

void FactoredExpr::absorb_poly(LaurentPoly p, std::int32_t e) {
  // Normalize to primitive, positive-leading, monomial-free form; the
  // stripped parts go into coeff_ and mono_.
  mpz_class c = p.content();
  if (p.leading().second < 0) c = -c;
  if (c != 1) p.divide_content(c);
  Monomial m0;
  for (VarId v : p.variables()) {
    std::int32_t k = p.min_exponent(v);
    if (k != 0) m0.e.push_back({v, k});
  }
  if (!m0.is_one()) p = p.mul_monomial(m0.inverse());

  mpq_class cf(c);
  if (e >= 0) {
    for (std::int32_t i = 0; i < e; ++i) coeff_ *= cf;
  } else {
    for (std::int32_t i = 0; i < -e; ++i) coeff_ /= cf;
  }
  mono_ = mono_ * m0.pow(e);
  if (!p.is_constant()) push_factor(PolyPool::instance().intern(std::move(p)), e);
}

FactoredExpr FactoredExpr::operator*(const FactoredExpr& o) const {
  FactoredExpr r = *this;
  r.coeff_ *= o.coeff_;
  r.mono_ = r.mono_ * o.mono_;
  for (auto& [f, e] : o.facs_) r.push_factor(f, e);
  return r;
}

FactoredExpr FactoredExpr::inverse() const {
  FactoredExpr r;
  r.coeff_ = 1 / coeff_;
  r.mono_ = mono_.inverse();
  for (auto& [f, e] : facs_) r.facs_.emplace(f, -e);
  return r;
}

FactoredExpr FactoredExpr::pow(std::int32_t k) const {
  if (k == 0) return one();
  FactoredExpr r;
  mpq_class c = coeff_;
  std::int32_t a = k < 0 ? -k : k;
  mpq_class acc(1);
  for (std::int32_t i = 0; i < a; ++i) acc *= c;
  r.coeff_ = k < 0 ? mpq_class(1) / acc : acc;
  r.mono_ = mono_.pow(k);
  for (auto& [f, e] : facs_) r.facs_.emplace(f, e * k);
  return r;
}

void FactoredExpr::split(LaurentPoly& num, LaurentPoly& den) const {
  Monomial mp, mn;
  for (auto& [v, k] : mono_.e)
    (k > 0 ? mp : mn).e.push_back({v, k > 0 ? k : -k});
  num = LaurentPoly::monomial(mp, coeff_.get_num());
  den = LaurentPoly::monomial(mn, coeff_.get_den());
  for (auto& [f, e] : facs_) {
    if (e > 0)
      num = num * f->pow(static_cast<std::uint32_t>(e));
    else
      den = den * f->pow(static_cast<std::uint32_t>(-e));
  }
}

RationalExpr FactoredExpr::expand() const {
  LaurentPoly n, d;
  split(n, d);
  return RationalExpr(std::move(n), std::move(d));
}

FactoredExpr FactoredExpr::one_plus(const FactoredExpr& x) {
  // Denominator part of x, as a positive-exponent factored expression.
  FactoredExpr dpart;
  dpart.coeff_ = x.coeff_.get_den();
  for (auto& [v, k] : x.mono_.e)
    if (k < 0) dpart.mono_.e.push_back({v, -k});
  for (auto& [f, e] : x.facs_)
    if (e < 0) dpart.facs_.emplace(f, -e);

  FactoredExpr npart = x * dpart;
  LaurentPoly np, nd, dp, dd;
  npart.split(np, nd);
  dpart.split(dp, dd);
  if (!nd.is_constant() || !dd.is_constant())
    throw std::logic_error("one_plus: split left a denominator");
  // np/nd + dp/dd with nd, dd constants
  LaurentPoly sum = np.mul_monomial(Monomial::one(), dd.leading().second) +
                    dp.mul_monomial(Monomial::one(), nd.leading().second);
  FactoredExpr r = from_poly(sum);
  mpq_class scale(1);
  scale /= mpq_class(nd.leading().second) * mpq_class(dd.leading().second);
  r.coeff_ *= scale;
  return r * dpart.inverse();
}

FactoredExpr FactoredExpr::add(const FactoredExpr& x, const FactoredExpr& y) {
  return x * one_plus(y * x.inverse());
}

bool FactoredExpr::equals(const FactoredExpr& o) const {
  FactoredExpr r = *this * o.inverse();
  if (r.facs_.empty()) return r.coeff_ == 1 && r.mono_.is_one();
  LaurentPoly n, d;
  r.split(n, d);
  return n == d;
}

RationalExpr FactoredExpr::substitute_expand(
    const std::map<VarId, RationalExpr>& map) const {
  RationalExpr r = RationalExpr::fraction(coeff_.get_num(), coeff_.get_den());
  for (auto& [v, k] : mono_.e) {
    auto it = map.find(v);
    RationalExpr base =
        it == map.end() ? RationalExpr::variable(v) : it->second;
    r = r * base.pow(k);
  }
  for (auto& [f, e] : facs_) {
    RationalExpr img = RationalExpr::from_poly(*f).substitute(map);
    r = r * img.pow(e);
  }
  return r;
}

}  // namespace cw
