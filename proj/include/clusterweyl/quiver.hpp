#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterweyl/factored.hpp"

namespace cw {

// Lattice vertex: Dynkin node (0 = affine layer) and rescaled index k = n/d.
struct LVertex {
  int node = 0;
  int k = 0;
  bool operator==(const LVertex& o) const { return node == o.node && k == o.k; }
  bool operator<(const LVertex& o) const {
    return node != o.node ? node < o.node : k < o.k;
  }
};

// Quiver on a finite vertex list with skew-symmetric exchange matrix
// eps[i][j] = #arrows(i->j) - #arrows(j->i).
//
// For periodic lattices modulus > 0 and k is stored reduced mod modulus;
// window lattices have modulus == 0.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<LVertex> verts, int modulus);

  int size() const { return static_cast<int>(verts_.size()); }
  int modulus() const { return modulus_; }
  const std::vector<LVertex>& vertices() const { return verts_; }
  const LVertex& vertex(int idx) const { return verts_[idx]; }

  int reduce_k(int k) const;
  // Index of (node, k) or -1 when absent (window edges).
  int find(int node, int k) const;
  int require(int node, int k) const;

  int eps(int i, int j) const { return eps_[i][j]; }
  void add_arrow(int from, int to, int mult = 1);
  // Arrow addition by labels; silently dropped if an endpoint is outside a
  // window.
  void add_arrow_lv(int fn, int fk, int tn, int tk, int mult = 1);

  void mutate(int k);              // exchange-matrix mutation
  void swap_slots(int a, int b);   // conjugate eps by a transposition

  bool same_eps(const Quiver& o) const { return eps_ == o.eps_; }
  bool has_self_loop_risk() const;  // any eps[i][i] != 0 (never expected)

  std::string vertex_name(int idx, const Frac& d) const;

 private:
  std::vector<LVertex> verts_;
  std::vector<std::vector<int>> eps_;
  std::vector<std::int64_t> lut_;  // (node,k) -> index lookup
  int modulus_ = 0;
  int min_node_ = 0, min_k_ = 0, node_span_ = 0, k_span_ = 0;
  void build_lookup();
};

enum class MoveKind { Mutate, Swap };

struct Move {
  MoveKind kind;
  LVertex a;
  LVertex b;  // Swap only
  static Move mutate(LVertex v) { return {MoveKind::Mutate, v, {}}; }
  static Move swap(LVertex x, LVertex y) { return {MoveKind::Swap, x, y}; }
};

using MutationSequence = std::vector<Move>;

// Reverses a sequence; mutations are involutions and swaps self-inverse, so
// this realizes the inverse sequence.
MutationSequence inverse_sequence(const MutationSequence& seq);

// Full symbolic seed: X- and A-variables attached to the quiver slots.
struct Seed {
  Quiver Q;
  std::vector<FactoredExpr> X;
  std::vector<FactoredExpr> A;

  static Seed initial(const Quiver& q);
  void mutate(int k);
  void swap_slots(int a, int b);
  void apply(const MutationSequence& seq);
  bool equals(const Seed& o) const;
};

// Tropical X-seed: per-slot exponent vectors over the semifield generators
// u_v (one generator per slot of the initial quiver).
struct TropSeed {
  Quiver Q;
  std::vector<std::vector<std::int64_t>> x;

  static TropSeed initial(const Quiver& q);
  void mutate(int k);
  void swap_slots(int a, int b);
  void apply(const MutationSequence& seq);
  bool equals(const TropSeed& o) const;
};

enum class TropSign { Positive, Negative, Mixed };

// Positive iff all exponents >= 0; the zero vector reports Positive.
TropSign tropical_sign(const std::vector<std::int64_t>& x);
bool seed_sign_coherent(const TropSeed& s);

struct GreenTraceEntry {
  LVertex at;
  TropSign sign;
};

struct GreenReport {
  bool green = true;
  bool maximal = false;
  std::vector<GreenTraceEntry> trace;
};

GreenReport green_trace(const Quiver& q, const MutationSequence& seq);
bool is_green(const Quiver& q, const MutationSequence& seq);
bool is_maximal_green(const Quiver& q, const MutationSequence& seq);

enum class Periodicity { Trivial, Nontrivial, QuiverChanged };

// Theorem-of-periodicity certificate: replay seq on (Q, u) tropically.
Periodicity check_periodicity(const Quiver& q, const MutationSequence& seq);
// Direct symbolic check, for small instances only.
bool is_trivial_on(const Seed& s, const MutationSequence& seq);

// p*(X^v) = prod_w A_w^{eps_{v,w}} as exponent vectors over slots.
std::vector<std::vector<int>> positive_map_exponents(const Quiver& q);

}  // namespace cw
