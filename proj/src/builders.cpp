#include "clusterweyl/builders.hpp"

#include <stdexcept>

namespace cw {

namespace {

struct LatticeSpec {
  CartanData cd;
  int node0_step = 0;    // chain step of the affine node, 0 = no affine node
  int node0_attach = 0;  // node the affine layer attaches to
};

// Affine layer data. The non-dual lists follow the explicit arrow triples
// for B^(1), C^(1), F4^(1), G2^(1): node 0 is a d'-step chain with
//   v^a_k -> v^0_k  and  v^0_{k+d'/d} -> v^a_k.
// The dual versions swap the long/short role of node 0: a d-step chain with
//   v^a_k -> v^0_k  and  v^0_{k+Dk[a]} -> v^a_k,
// pinned for G2 (attach node 1) and derived for B/C/F4.
LatticeSpec lattice_spec(const DynkinType& t, AffineKind aff) {
  LatticeSpec sp;
  sp.cd = cartan_data(t);
  if (aff == AffineKind::None) return sp;
  if (t.family != Family::B && t.family != Family::C &&
      t.family != Family::F && t.family != Family::G)
    throw std::invalid_argument(
        "affine extension supported for B, C, F4, G2 only");
  const bool dual = aff == AffineKind::DualAffine;
  switch (t.family) {
    case Family::B: sp.node0_attach = 2; break;
    case Family::C: sp.node0_attach = t.rank == 2 ? 2 : 1; break;
    case Family::F: sp.node0_attach = 1; break;
    case Family::G: sp.node0_attach = dual ? 1 : 2; break;
    default: break;
  }
  // Rank-2 B and C share one affine quiver; both names emit the
  // B-orientation with the layer on the short node.
  if (t.family == Family::B && t.rank == 2) sp.node0_attach = 2;
  sp.node0_step = dual ? 1 : sp.cd.Dprime;
  return sp;
}

// Arrow generators of the infinite quiver in rescaled units (every (i,k),
// i in S, k in Z, is a vertex):
//   chains:   v^i_k -> v^i_{k+Dk_i}
//   adjacent i<j:  v^j_k -> v^i_{k+s},  v^i_{k+Dk_j} -> v^j_k
//     with s = 0 if Dk_i <= Dk_j, else -Dk_j.
void emit_arrows(Quiver& q, const LatticeSpec& sp, int kmin, int kmax) {
  const CartanData& cd = sp.cd;
  for (int k = kmin; k <= kmax; ++k) {
    for (int i = 1; i <= cd.rank; ++i)
      q.add_arrow_lv(i, k, i, k + cd.Dk[i - 1]);
    for (auto [i, j] : cd.edges) {
      int di = cd.Dk[i - 1], dj = cd.Dk[j - 1];
      int s = di <= dj ? 0 : -dj;
      q.add_arrow_lv(j, k, i, k + s);
      q.add_arrow_lv(i, k + dj, j, k);
    }
    if (sp.node0_step > 0) {
      q.add_arrow_lv(0, k, 0, k + sp.node0_step);
      int a = sp.node0_attach;
      q.add_arrow_lv(a, k, 0, k);
      if (sp.node0_step == 1) {
        q.add_arrow_lv(0, k + cd.Dk[a - 1], a, k);
      } else {
        q.add_arrow_lv(0, k + sp.node0_step, a, k);
      }
    }
  }
}

std::vector<LVertex> lattice_vertices(const LatticeSpec& sp, int kmin,
                                      int kmax) {
  std::vector<LVertex> vs;
  int lo = sp.node0_step > 0 ? 0 : 1;
  for (int i = lo; i <= sp.cd.rank; ++i)
    for (int k = kmin; k <= kmax; ++k) vs.push_back({i, k});
  return vs;
}

}  // namespace

Quiver build_window(const DynkinType& t, int kmin, int kmax, AffineKind aff) {
  LatticeSpec sp = lattice_spec(t, aff);
  if (kmax - kmin + 1 < 2 * sp.cd.Dprime)
    throw std::invalid_argument("window too small: need at least 2 d'/d indices");
  Quiver q(lattice_vertices(sp, kmin, kmax), 0);
  emit_arrows(q, sp, kmin, kmax);
  return q;
}

Quiver build_periodic(const DynkinType& t, int m, AffineKind aff) {
  if (m <= 1) throw std::invalid_argument("periodic build requires m >= 2");
  LatticeSpec sp = lattice_spec(t, aff);
  const int N = m * sp.cd.Dprime;
  Quiver q(lattice_vertices(sp, 0, N - 1), N);
  emit_arrows(q, sp, 0, N - 1);
  if (q.has_self_loop_risk())
    throw std::logic_error("periodic build produced a self-loop");
  return q;
}

std::vector<Circle> circles(const DynkinType& t, int m, AffineKind aff) {
  LatticeSpec sp = lattice_spec(t, aff);
  const int N = m * sp.cd.Dprime;
  std::vector<Circle> out;
  auto emit_node = [&](int node, int step) {
    for (int g = 1; g <= step; ++g) {
      Circle c;
      c.node = node;
      c.gamma = g;
      for (int k = g - 1; k < N; k += step) c.cyc.push_back({node, k});
      out.push_back(std::move(c));
    }
  };
  if (sp.node0_step > 0) emit_node(0, sp.node0_step);
  for (int i = 1; i <= sp.cd.rank; ++i) emit_node(i, sp.cd.Dk[i - 1]);
  return out;
}

int expected_circle_count(const DynkinType& t) {
  switch (t.family) {
    case Family::A:
    case Family::D:
    case Family::E: return t.rank;
    case Family::B: return 2 * t.rank - 1;
    case Family::C: return t.rank + 1;
    case Family::F: return 6;
    case Family::G: return 4;
  }
  return 0;
}

}  // namespace cw
