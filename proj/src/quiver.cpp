#include "clusterweyl/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cw {

Quiver::Quiver(std::vector<LVertex> verts, int modulus)
    : verts_(std::move(verts)), modulus_(modulus) {
  for (auto& v : verts_) v.k = reduce_k(v.k);
  eps_.assign(verts_.size(), std::vector<int>(verts_.size(), 0));
  build_lookup();
}

int Quiver::reduce_k(int k) const {
  if (modulus_ <= 0) return k;
  int r = k % modulus_;
  return r < 0 ? r + modulus_ : r;
}

void Quiver::build_lookup() {
  if (verts_.empty()) return;
  int min_n = verts_[0].node, max_n = verts_[0].node;
  int min_k = verts_[0].k, max_k = verts_[0].k;
  for (auto& v : verts_) {
    min_n = std::min(min_n, v.node);
    max_n = std::max(max_n, v.node);
    min_k = std::min(min_k, v.k);
    max_k = std::max(max_k, v.k);
  }
  min_node_ = min_n;
  min_k_ = min_k;
  node_span_ = max_n - min_n + 1;
  k_span_ = max_k - min_k + 1;
  lut_.assign(static_cast<std::size_t>(node_span_) * k_span_, -1);
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    auto& v = verts_[i];
    lut_[static_cast<std::size_t>(v.node - min_node_) * k_span_ +
         (v.k - min_k_)] = static_cast<std::int64_t>(i);
  }
}

int Quiver::find(int node, int k) const {
  k = reduce_k(k);
  if (node < min_node_ || node >= min_node_ + node_span_) return -1;
  if (k < min_k_ || k >= min_k_ + k_span_) return -1;
  return static_cast<int>(
      lut_[static_cast<std::size_t>(node - min_node_) * k_span_ + (k - min_k_)]);
}

int Quiver::require(int node, int k) const {
  int idx = find(node, k);
  if (idx < 0) {
    std::ostringstream os;
    os << "vertex (" << node << "," << k << ") not in quiver";
    throw std::out_of_range(os.str());
  }
  return idx;
}

void Quiver::add_arrow(int from, int to, int mult) {
  eps_[from][to] += mult;
  eps_[to][from] -= mult;
}

void Quiver::add_arrow_lv(int fn, int fk, int tn, int tk, int mult) {
  int a = find(fn, fk);
  int b = find(tn, tk);
  if (a < 0 || b < 0) return;
  add_arrow(a, b, mult);
}

void Quiver::mutate(int k) {
  const int n = size();
  if (k < 0 || k >= n) throw std::out_of_range("mutate: bad vertex");
  std::vector<std::vector<int>> next = eps_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        next[i][j] = -eps_[i][j];
      } else {
        int a = eps_[i][k], b = eps_[k][j];
        next[i][j] = eps_[i][j] + (std::abs(a) * b + a * std::abs(b)) / 2;
      }
    }
  }
  eps_ = std::move(next);
}

void Quiver::swap_slots(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < size(); ++i) std::swap(eps_[i][a], eps_[i][b]);
  std::swap(eps_[a], eps_[b]);
}

bool Quiver::has_self_loop_risk() const {
  for (int i = 0; i < size(); ++i)
    if (eps_[i][i] != 0) return true;
  return false;
}

std::string Quiver::vertex_name(int idx, const Frac& d) const {
  const LVertex& v = verts_[idx];
  Frac n = Frac(v.k) * d;
  std::ostringstream os;
  os << v.node << ":" << n;
  return os.str();
}

MutationSequence inverse_sequence(const MutationSequence& seq) {
  MutationSequence r(seq.rbegin(), seq.rend());
  return r;
}

Seed Seed::initial(const Quiver& q) {
  Seed s;
  s.Q = q;
  for (int i = 0; i < q.size(); ++i) {
    const LVertex& v = q.vertex(i);
    std::string suffix =
        std::to_string(v.node) + "_" + std::to_string(v.k);
    s.X.push_back(FactoredExpr::variable(make_var("X" + suffix)));
    s.A.push_back(FactoredExpr::variable(make_var("A" + suffix)));
  }
  return s;
}

void Seed::mutate(int k) {
  const int n = Q.size();
  // A-mutation first (uses eps row of k before the flip):
  //   A_k' = (prod_{eps_kj>0} A_j^{eps_kj} + prod_{eps_kj<0} A_j^{-eps_kj}) / A_k
  FactoredExpr up = FactoredExpr::one(), dn = FactoredExpr::one();
  for (int j = 0; j < n; ++j) {
    int e = Q.eps(k, j);
    if (e > 0) up = up * A[j].pow(e);
    if (e < 0) dn = dn * A[j].pow(-e);
  }
  FactoredExpr asum = FactoredExpr::add(up, dn);
  A[k] = asum * A[k].inverse();

  // X-mutation:
  //   X_k' = X_k^{-1};  X_i' = X_i (1 + X_k^{-sgn eps_ik})^{-eps_ik}
  FactoredExpr xk = X[k];
  std::optional<FactoredExpr> plus_inv, plus;
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    int e = Q.eps(i, k);
    if (e == 0) continue;
    if (e > 0) {
      if (!plus_inv) plus_inv = FactoredExpr::one_plus(xk.inverse());
      X[i] = X[i] * plus_inv->pow(-e);
    } else {
      if (!plus) plus = FactoredExpr::one_plus(xk);
      X[i] = X[i] * plus->pow(-e);
    }
  }
  X[k] = xk.inverse();

  Q.mutate(k);
}

void Seed::swap_slots(int a, int b) {
  Q.swap_slots(a, b);
  std::swap(X[a], X[b]);
  std::swap(A[a], A[b]);
}

void Seed::apply(const MutationSequence& seq) {
  for (auto& mv : seq) {
    if (mv.kind == MoveKind::Mutate) {
      mutate(Q.require(mv.a.node, mv.a.k));
    } else {
      swap_slots(Q.require(mv.a.node, mv.a.k), Q.require(mv.b.node, mv.b.k));
    }
  }
}

bool Seed::equals(const Seed& o) const {
  if (!Q.same_eps(o.Q)) return false;
  for (int i = 0; i < Q.size(); ++i)
    if (!X[i].equals(o.X[i]) || !A[i].equals(o.A[i])) return false;
  return true;
}

TropSeed TropSeed::initial(const Quiver& q) {
  TropSeed s;
  s.Q = q;
  s.x.assign(q.size(), std::vector<std::int64_t>(q.size(), 0));
  for (int i = 0; i < q.size(); ++i) s.x[i][i] = 1;
  return s;
}

void TropSeed::mutate(int k) {
  const int n = Q.size();
  const auto xk = x[k];
  for (int i = 0; i < n; ++i) {
    if (i == k) continue;
    int e = Q.eps(i, k);
    if (e == 0) continue;
    // (1 (+) x_k^{-sgn e})^{-e}: exponentwise min(0, -sgn(e)*x_k), scaled.
    int s = e > 0 ? 1 : -1;
    for (int a = 0; a < n; ++a) {
      std::int64_t w = std::min<std::int64_t>(0, -s * xk[a]);
      x[i][a] += -static_cast<std::int64_t>(e) * w;
    }
  }
  for (int a = 0; a < n; ++a) x[k][a] = -xk[a];
  Q.mutate(k);
}

void TropSeed::swap_slots(int a, int b) {
  Q.swap_slots(a, b);
  std::swap(x[a], x[b]);
}

void TropSeed::apply(const MutationSequence& seq) {
  for (auto& mv : seq) {
    if (mv.kind == MoveKind::Mutate) {
      mutate(Q.require(mv.a.node, mv.a.k));
    } else {
      swap_slots(Q.require(mv.a.node, mv.a.k), Q.require(mv.b.node, mv.b.k));
    }
  }
}

bool TropSeed::equals(const TropSeed& o) const {
  return Q.same_eps(o.Q) && x == o.x;
}

TropSign tropical_sign(const std::vector<std::int64_t>& v) {
  bool has_pos = false, has_neg = false;
  for (auto a : v) {
    if (a > 0) has_pos = true;
    if (a < 0) has_neg = true;
  }
  if (has_pos && has_neg) return TropSign::Mixed;
  if (has_neg) return TropSign::Negative;
  return TropSign::Positive;
}

bool seed_sign_coherent(const TropSeed& s) {
  for (auto& v : s.x)
    if (tropical_sign(v) == TropSign::Mixed) return false;
  return true;
}

GreenReport green_trace(const Quiver& q, const MutationSequence& seq) {
  GreenReport rep;
  TropSeed s = TropSeed::initial(q);
  for (auto& mv : seq) {
    if (mv.kind == MoveKind::Swap) {
      s.swap_slots(s.Q.require(mv.a.node, mv.a.k),
                   s.Q.require(mv.b.node, mv.b.k));
      continue;
    }
    int idx = s.Q.require(mv.a.node, mv.a.k);
    TropSign sign = tropical_sign(s.x[idx]);
    rep.trace.push_back({mv.a, sign});
    if (sign != TropSign::Positive) rep.green = false;
    s.mutate(idx);
    if (!seed_sign_coherent(s))
      throw std::logic_error("sign coherence violated along mutation path");
  }
  if (rep.green) {
    rep.maximal = true;
    for (auto& v : s.x)
      if (tropical_sign(v) != TropSign::Negative) { rep.maximal = false; break; }
  }
  return rep;
}

bool is_green(const Quiver& q, const MutationSequence& seq) {
  return green_trace(q, seq).green;
}

bool is_maximal_green(const Quiver& q, const MutationSequence& seq) {
  return green_trace(q, seq).maximal;
}

Periodicity check_periodicity(const Quiver& q, const MutationSequence& seq) {
  TropSeed s = TropSeed::initial(q);
  s.apply(seq);
  if (!s.Q.same_eps(q)) return Periodicity::QuiverChanged;
  return s.equals(TropSeed::initial(q)) ? Periodicity::Trivial
                                        : Periodicity::Nontrivial;
}

bool is_trivial_on(const Seed& s, const MutationSequence& seq) {
  Seed t = s;
  t.apply(seq);
  if (!t.Q.same_eps(s.Q))
    throw std::invalid_argument("is_trivial_on: sequence changes the quiver");
  return t.equals(s);
}

std::vector<std::vector<int>> positive_map_exponents(const Quiver& q) {
  std::vector<std::vector<int>> r(q.size(), std::vector<int>(q.size(), 0));
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) r[i][j] = q.eps(i, j);
  return r;
}

}  // namespace cw
