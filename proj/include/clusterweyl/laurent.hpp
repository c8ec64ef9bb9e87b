#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clusterweyl/varpool.hpp"

namespace cw {

// Exponent vector, sparse: sorted by VarId, no zero exponents.
struct Monomial {
  std::vector<std::pair<VarId, std::int32_t>> e;

  static Monomial one() { return {}; }
  static Monomial var(VarId v, std::int32_t k = 1) {
    Monomial m;
    if (k != 0) m.e.push_back({v, k});
    return m;
  }

  bool is_one() const { return e.empty(); }
  std::int64_t total_degree() const;
  std::int32_t exponent(VarId v) const;

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  Monomial pow(std::int32_t k) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator<(const Monomial& o) const;  // deterministic term order

  std::string str() const;
};

// Laurent polynomial: canonical sorted term list, no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  LaurentPoly() = default;
  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(const mpz_class& c);
  static LaurentPoly monomial(const Monomial& m, const mpz_class& c = 1);
  static LaurentPoly variable(VarId v, std::int32_t k = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term under the canonical order (last in sorted sequence).
  const Term& leading() const { return terms_.back(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly mul_monomial(const Monomial& m, const mpz_class& c = 1) const;
  LaurentPoly pow(std::uint32_t k) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Smallest exponent of v over all terms (0 if v absent from every term).
  std::int32_t min_exponent(VarId v) const;
  // All variables occurring in some term.
  std::vector<VarId> variables() const;
  // gcd of |coefficients|; 0 for the zero polynomial.
  mpz_class content() const;
  void divide_content(const mpz_class& g);

  // d/dv as a Laurent polynomial (exponent-weighted).
  LaurentPoly derivative(VarId v) const;

  std::string str() const;
  std::size_t hash() const;

  // Build from an unsorted term accumulation.
  static LaurentPoly from_map(std::map<Monomial, mpz_class>&& acc);

 private:
  std::vector<Term> terms_;  // sorted by Monomial::operator<
};

}  // namespace cw
