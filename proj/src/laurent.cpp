#include "clusterweyl/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cw {

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto& [v, k] : e) d += k;
  return d;
}

std::int32_t Monomial::exponent(VarId v) const {
  for (auto& [w, k] : e)
    if (w == v) return k;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e.reserve(e.size() + o.e.size());
  std::size_t i = 0, j = 0;
  while (i < e.size() && j < o.e.size()) {
    if (e[i].first < o.e[j].first) {
      r.e.push_back(e[i++]);
    } else if (e[i].first > o.e[j].first) {
      r.e.push_back(o.e[j++]);
    } else {
      std::int32_t k = e[i].second + o.e[j].second;
      if (k != 0) r.e.push_back({e[i].first, k});
      ++i;
      ++j;
    }
  }
  while (i < e.size()) r.e.push_back(e[i++]);
  while (j < o.e.size()) r.e.push_back(o.e[j++]);
  return r;
}

Monomial Monomial::inverse() const {
  Monomial r = *this;
  for (auto& [v, k] : r.e) k = -k;
  return r;
}

Monomial Monomial::pow(std::int32_t k) const {
  Monomial r;
  if (k == 0) return r;
  r = *this;
  for (auto& [v, kk] : r.e) kk *= k;
  return r;
}

bool Monomial::operator<(const Monomial& o) const {
  // Graded-lexicographic on (VarId, exponent) pairs; total degree first so
  // the constant term sorts first and rendering is stable.
  std::int64_t da = total_degree(), db = o.total_degree();
  if (da != db) return da < db;
  return e < o.e;
}

std::string Monomial::str() const {
  if (e.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, k] : e) {
    if (!first) os << "*";
    first = false;
    os << var_label(v);
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

LaurentPoly LaurentPoly::constant(const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({Monomial::one(), c});
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const mpz_class& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::variable(VarId v, std::int32_t k) {
  return monomial(Monomial::var(v, k));
}

LaurentPoly LaurentPoly::from_map(std::map<Monomial, mpz_class>&& acc) {
  LaurentPoly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first < o.terms_[j].first) {
      r.terms_.push_back(terms_[i++]);
    } else if (o.terms_[j].first < terms_[i].first) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      mpz_class c = terms_[i].second + o.terms_[j].second;
      if (c != 0) r.terms_.push_back({terms_[i].first, std::move(c)});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::mul_monomial(const Monomial& m,
                                      const mpz_class& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (auto& [tm, tc] : terms_) r.terms_.push_back({tm * m, tc * c});
  // Multiplying by a fixed monomial can permute the graded order.
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly();
  if (o.is_monomial()) return mul_monomial(o.terms_[0].first, o.terms_[0].second);
  if (is_monomial()) return o.mul_monomial(terms_[0].first, terms_[0].second);
  std::map<Monomial, mpz_class> acc;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) acc[ma * mb] += ca * cb;
  return from_map(std::move(acc));
}

LaurentPoly LaurentPoly::pow(std::uint32_t k) const {
  LaurentPoly r = constant(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) r = r * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return r;
}

std::int32_t LaurentPoly::min_exponent(VarId v) const {
  bool seen = false;
  std::int32_t m = 0;
  for (auto& [mn, c] : terms_) {
    std::int32_t k = mn.exponent(v);
    if (!seen || k < m) m = k;
    seen = true;
  }
  return m;
}

std::vector<VarId> LaurentPoly::variables() const {
  std::vector<VarId> vs;
  for (auto& [m, c] : terms_)
    for (auto& [v, k] : m.e) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void LaurentPoly::divide_content(const mpz_class& g) {
  if (g == 1 || g == 0) return;
  for (auto& [m, c] : terms_) c /= g;
}

LaurentPoly LaurentPoly::derivative(VarId v) const {
  std::map<Monomial, mpz_class> acc;
  for (auto& [m, c] : terms_) {
    std::int32_t k = m.exponent(v);
    if (k == 0) continue;
    acc[m * Monomial::var(v, -1)] += c * k;
  }
  return from_map(std::move(acc));
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) { os << "-"; a = -a; }
    } else {
      os << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << m.str();
    }
  }
  return os.str();
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (auto& [m, c] : terms_) {
    for (auto& [v, k] : m.e) {
      mix(static_cast<std::size_t>(v));
      mix(static_cast<std::size_t>(static_cast<std::uint32_t>(k)));
    }
    mix(std::hash<std::string>{}(c.get_str()));
  }
  return h;
}

}  // namespace cw
