#include "clusterweyl/lie.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace cw {

DynkinType DynkinType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type string: " + s);
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("bad type string: " + s);
  std::string num = s.substr(1);
  for (char c : num)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad type string: " + s);
  int rank = std::stoi(num);
  DynkinType t{static_cast<Family>(f), rank};
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    default: ok = false;
  }
  if (!ok) throw std::invalid_argument("invalid rank for family: " + s);
  return t;
}

std::string DynkinType::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanData cartan_data(const DynkinType& t) {
  const int l = t.rank;
  CartanData cd;
  cd.rank = l;
  cd.C.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) cd.C[i][i] = 2;
  cd.d.assign(l, Frac(1));

  auto bond = [&cd](int i, int j, int cij, int cji) {
    cd.C[i - 1][j - 1] = cij;
    cd.C[j - 1][i - 1] = cji;
    cd.edges.push_back({i, j});
  };

  switch (t.family) {
    case Family::A:
      for (int i = 1; i < l; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::B:
      for (int i = 1; i < l - 1; ++i) bond(i, i + 1, -1, -1);
      bond(l - 1, l, -1, -2);
      cd.d[l - 1] = Frac(1, 2);
      break;
    case Family::C:
      for (int i = 1; i < l - 1; ++i) bond(i, i + 1, -1, -1);
      bond(l - 1, l, -2, -1);
      cd.d[l - 1] = Frac(2);
      break;
    case Family::D:
      for (int i = 1; i <= l - 2; ++i) bond(i, i + 1, -1, -1);
      bond(l - 2, l, -1, -1);
      break;
    case Family::E:
      // Chain 1-2-3-5-6-...-l with node 4 attached to node 3.
      bond(1, 2, -1, -1);
      bond(2, 3, -1, -1);
      bond(3, 4, -1, -1);
      bond(3, 5, -1, -1);
      for (int i = 5; i < l; ++i) bond(i, i + 1, -1, -1);
      break;
    case Family::F:
      bond(1, 2, -1, -1);
      bond(2, 3, -1, -2);
      bond(3, 4, -1, -1);
      cd.d[2] = Frac(1, 2);
      cd.d[3] = Frac(1, 2);
      break;
    case Family::G:
      bond(1, 2, -3, -1);
      cd.d[1] = Frac(3);
      break;
  }

  std::sort(cd.edges.begin(), cd.edges.end());
  cd.dmin = cd.d[0];
  cd.dmax = cd.d[0];
  for (int i = 1; i < l; ++i) {
    if (cd.d[i] < cd.dmin) cd.dmin = cd.d[i];
    if (cd.dmax < cd.d[i]) cd.dmax = cd.d[i];
  }

  cd.B.assign(l, std::vector<Frac>(l, Frac(0)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cd.B[i][j] = cd.d[i] * Frac(cd.C[i][j]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (cd.B[i][j] != cd.B[j][i])
        throw std::logic_error("Cartan data: D*C not symmetric");

  cd.m.assign(l, std::vector<int>(l, 2));
  for (int i = 0; i < l; ++i) {
    cd.m[i][i] = 1;
    for (int j = 0; j < l; ++j) {
      if (i == j) continue;
      int p = cd.C[i][j] * cd.C[j][i];
      int mij = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : -1;
      if (mij < 0) throw std::logic_error("Cartan data: C_ij*C_ji >= 4");
      cd.m[i][j] = mij;
    }
  }

  cd.Dk.assign(l, 1);
  for (int i = 0; i < l; ++i) {
    Frac q = cd.d[i] / cd.dmin;
    if (q.den != 1) throw std::logic_error("d_i/d not integral");
    cd.Dk[i] = static_cast<int>(q.num);
  }
  Frac qp = cd.dmax / cd.dmin;
  cd.Dprime = static_cast<int>(qp.num);
  return cd;
}

int coxeter_m(const DynkinType& t, int i, int j) {
  CartanData cd = cartan_data(t);
  return cd.m[i - 1][j - 1];
}

RootVector simple_root(const CartanData& cd, int i) {
  RootVector v(cd.rank, 0);
  v[i - 1] = 1;
  return v;
}

RootVector simple_reflection(const CartanData& cd, int i, const RootVector& v) {
  // s_i(v) = v - (C v)_i alpha_i
  std::int64_t c = 0;
  for (int j = 0; j < cd.rank; ++j) c += cd.C[i - 1][j] * v[j];
  RootVector r = v;
  r[i - 1] -= c;
  return r;
}

bool root_positive(const RootVector& v) {
  for (auto x : v)
    if (x < 0) return false;
  return true;
}

bool root_negative(const RootVector& v) {
  for (auto x : v)
    if (x > 0) return false;
  return true;
}

std::vector<RootVector> positive_roots(const CartanData& cd) {
  std::set<RootVector> pos;
  std::vector<RootVector> queue;
  for (int i = 1; i <= cd.rank; ++i) {
    RootVector a = simple_root(cd, i);
    pos.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVector v = queue.back();
    queue.pop_back();
    for (int i = 1; i <= cd.rank; ++i) {
      RootVector w = simple_reflection(cd, i, v);
      if (root_positive(w) && pos.insert(w).second) queue.push_back(w);
    }
  }
  return std::vector<RootVector>(pos.begin(), pos.end());
}

RootVector weyl_apply(const CartanData& cd, const WeylWord& w,
                      const RootVector& v) {
  RootVector r = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r = simple_reflection(cd, *it, r);
  return r;
}

namespace {

// Images of the simple roots under the running word; extending by s_i keeps
// the word reduced iff w(alpha_i) is still positive.
struct WordBuilder {
  const CartanData& cd;
  std::vector<RootVector> img;
  WeylWord word;

  explicit WordBuilder(const CartanData& c) : cd(c) {
    for (int i = 1; i <= cd.rank; ++i) img.push_back(simple_root(cd, i));
  }

  bool extendable(int i) const { return root_positive(img[i - 1]); }

  void extend(int i) {
    // w' = w s_i, so w'(alpha_j) = w(alpha_j) - C_ij w(alpha_i).
    std::vector<RootVector> next = img;
    for (int j = 1; j <= cd.rank; ++j) {
      int cij = cd.C[i - 1][j - 1];
      if (cij == 0) continue;
      for (int a = 0; a < cd.rank; ++a) next[j - 1][a] -= cij * img[i - 1][a];
    }
    img = std::move(next);
    word.push_back(i);
  }
};

}  // namespace

WeylWord longest_word(const DynkinType& t) {
  CartanData cd = cartan_data(t);
  WordBuilder b(cd);
  for (;;) {
    int pick = 0;
    for (int i = 1; i <= cd.rank; ++i)
      if (b.extendable(i)) { pick = i; break; }
    if (pick == 0) break;
    b.extend(pick);
  }
  return b.word;
}

bool is_reduced(const CartanData& cd, const WeylWord& w) {
  WordBuilder b(cd);
  for (int i : w) {
    if (i < 1 || i > cd.rank) return false;
    if (!b.extendable(i)) return false;
    b.extend(i);
  }
  return true;
}

WeylWord random_reduced_word(const CartanData& cd, std::mt19937_64& rng,
                             int max_len) {
  WordBuilder b(cd);
  int target = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
  for (int step = 0; step < target; ++step) {
    std::vector<int> cands;
    for (int i = 1; i <= cd.rank; ++i)
      if (b.extendable(i)) cands.push_back(i);
    if (cands.empty()) break;
    b.extend(cands[rng() % cands.size()]);
  }
  return b.word;
}

}  // namespace cw
