#pragma once

#include <map>
#include <string>

#include "clusterweyl/laurent.hpp"

namespace cw {

// Exact rational function num/den over arbitrary-precision integers.
//
// Canonical form: num and den are true polynomials (no negative exponents),
// no variable divides both, gcd of the two integer contents is 1, and den's
// leading coefficient is positive. Equality is decided by cross
// multiplication; no polynomial gcd is ever computed.
class RationalExpr {
 public:
  RationalExpr() : num_(LaurentPoly::zero()), den_(LaurentPoly::constant(1)) {}
  RationalExpr(LaurentPoly num, LaurentPoly den);

  static RationalExpr zero() { return RationalExpr(); }
  static RationalExpr one() { return constant(1); }
  static RationalExpr constant(const mpz_class& c) {
    return RationalExpr(LaurentPoly::constant(c), LaurentPoly::constant(1));
  }
  static RationalExpr fraction(const mpz_class& p, const mpz_class& q) {
    return RationalExpr(LaurentPoly::constant(p), LaurentPoly::constant(q));
  }
  static RationalExpr variable(VarId v, std::int32_t k = 1) {
    return RationalExpr(LaurentPoly::variable(v, k), LaurentPoly::constant(1));
  }
  static RationalExpr from_poly(LaurentPoly p) {
    return RationalExpr(std::move(p), LaurentPoly::constant(1));
  }
  static RationalExpr monomial(const Monomial& m, const mpz_class& c = 1) {
    return RationalExpr(LaurentPoly::monomial(m, c), LaurentPoly::constant(1));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalExpr operator+(const RationalExpr& o) const;
  RationalExpr operator-(const RationalExpr& o) const;
  RationalExpr operator*(const RationalExpr& o) const;
  RationalExpr operator/(const RationalExpr& o) const;
  RationalExpr operator-() const;
  RationalExpr inverse() const;
  RationalExpr pow(std::int32_t k) const;

  // True iff num*o.den - o.num*den == 0.
  bool equals(const RationalExpr& o) const;

  // Replace every variable present in `map`; others are kept.
  // Throws if a substitution makes the denominator vanish.
  RationalExpr substitute(const std::map<VarId, RationalExpr>& map) const;

  RationalExpr derivative(VarId v) const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
  void canonicalize();
};

}  // namespace cw
