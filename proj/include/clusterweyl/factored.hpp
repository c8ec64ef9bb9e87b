#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "clusterweyl/rational.hpp"

namespace cw {

using PolyRef = std::shared_ptr<const LaurentPoly>;

// Interns canonical polynomials so identical factors share one node and
// cancel by exponent arithmetic alone.
class PolyPool {
 public:
  static PolyPool& instance() {
    static PolyPool p;
    return p;
  }
  PolyRef intern(LaurentPoly poly);

 private:
  PolyPool() = default;
  std::mutex mu_;
  std::unordered_multimap<std::size_t, PolyRef> table_;
};

// Multiplicative representation  coeff * monomial * prod_i f_i^{e_i}
// with each f_i an interned primitive polynomial (>= 2 terms, nonnegative
// exponents, unit content, positive leading coefficient).
//
// Seeds store their X- and A-variables in this form: cluster mutations only
// ever multiply, invert, and form 1 + (monomial-like ratio), so shared
// factors cancel exactly without any polynomial gcd.
class FactoredExpr {
 public:
  FactoredExpr() : coeff_(1) {}

  static FactoredExpr one() { return FactoredExpr(); }
  static FactoredExpr constant(const mpq_class& c);
  static FactoredExpr variable(VarId v, std::int32_t k = 1);
  static FactoredExpr from_poly(const LaurentPoly& p);

  bool is_one() const { return coeff_ == 1 && mono_.is_one() && facs_.empty(); }

  FactoredExpr operator*(const FactoredExpr& o) const;
  FactoredExpr inverse() const;
  FactoredExpr pow(std::int32_t k) const;

  // 1 + x, computed through the cancelled num/den split of x.
  static FactoredExpr one_plus(const FactoredExpr& x);
  // x + y  ==  x * (1 + y/x)
  static FactoredExpr add(const FactoredExpr& x, const FactoredExpr& y);

  // Expand into a canonical rational function.
  RationalExpr expand() const;
  // Numerator / denominator split as expanded polynomials.
  void split(LaurentPoly& num, LaurentPoly& den) const;

  bool equals(const FactoredExpr& o) const;

  // Substitute every variable through `map` (applied per factor).
  RationalExpr substitute_expand(const std::map<VarId, RationalExpr>& map) const;

  std::string str() const { return expand().str(); }

 private:
  mpq_class coeff_;
  Monomial mono_;
  std::map<PolyRef, std::int32_t> facs_;  // keyed by pointer identity

  void push_factor(const PolyRef& f, std::int32_t e);
  void absorb_poly(LaurentPoly p, std::int32_t e);
};

}  // namespace cw
