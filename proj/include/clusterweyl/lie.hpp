#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "clusterweyl/fraction.hpp"

namespace cw {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
  Family family;
  int rank;

  // Parses "A3", "b4", "G2" (case-insensitive). Throws on bad input or an
  // invalid rank for the family (E in {6,7,8}, F=4, G=2, D>=4, B,C>=2).
  static DynkinType parse(const std::string& s);
  std::string str() const;
  bool simply_laced() const {
    return family == Family::A || family == Family::D || family == Family::E;
  }
};

// Cartan matrix C, symmetrizers d_i, symmetrized matrix B = D C, extreme
// symmetrizers d, d', Coxeter exponents m_ij, and the integer rescalings
// Dk_i = d_i/d used for lattice indices.
struct CartanData {
  int rank = 0;
  std::vector<std::vector<int>> C;
  std::vector<Frac> d;
  std::vector<std::vector<Frac>> B;
  Frac dmin, dmax;
  std::vector<std::vector<int>> m;
  std::vector<int> Dk;      // d_i / d, always integer
  int Dprime = 1;           // d' / d
  std::vector<std::pair<int, int>> edges;  // adjacent pairs (i<j), 1-based

  bool adjacent(int i, int j) const { return C[i - 1][j - 1] != 0 && i != j; }
};

CartanData cartan_data(const DynkinType& t);

int coxeter_m(const DynkinType& t, int i, int j);

// Root lattice vectors in simple-root coordinates (1-based node indices
// elsewhere; coeffs[0] is the alpha_1 coefficient).
using RootVector = std::vector<std::int64_t>;

RootVector simple_root(const CartanData& cd, int i);
RootVector simple_reflection(const CartanData& cd, int i, const RootVector& v);
bool root_positive(const RootVector& v);  // all coefficients >= 0
bool root_negative(const RootVector& v);

// All positive roots by reflection closure (independent oracle for lengths).
std::vector<RootVector> positive_roots(const CartanData& cd);

using WeylWord = std::vector<int>;  // 1-based letters; w = s_{w[0]} ... s_{w.back()}

// Applies w to v, rightmost letter first: w(v) = s_{w[0]}(s_{w[1]}(...(v))).
RootVector weyl_apply(const CartanData& cd, const WeylWord& w, const RootVector& v);

// Reduced word for the longest element via greedy descent, smallest index
// first; its length equals the number of positive roots.
WeylWord longest_word(const DynkinType& t);

bool is_reduced(const CartanData& cd, const WeylWord& w);

// Uniformly-ish random reduced word of length <= max_len (random right
// extensions while length stays additive).
WeylWord random_reduced_word(const CartanData& cd, std::mt19937_64& rng,
                             int max_len);

}  // namespace cw
