#pragma once

#include "clusterweyl/lie.hpp"
#include "clusterweyl/quiver.hpp"

namespace cw {

// Oriented circle along node i's lattice direction; vertices in cyclic
// order, base (smallest k) first.
struct Circle {
  int node = 0;
  int gamma = 1;  // 1..d_i/d
  std::vector<LVertex> cyc;
  int length() const { return static_cast<int>(cyc.size()); }
};

// Affine extension selector for the lattice quiver builders.
enum class AffineKind { None, Affine, DualAffine };

// Window piece of the infinite lattice quiver: vertices (i, k) for
// kmin <= k <= kmax in rescaled units k = n/d; arrows with an endpoint
// outside the window are dropped.
Quiver build_window(const DynkinType& t, int kmin, int kmax,
                    AffineKind aff = AffineKind::None);

// Periodic quiver: per node, k runs over Z / (m d'/d); wrap-around arrow
// coincidences accumulate in eps.
Quiver build_periodic(const DynkinType& t, int m,
                      AffineKind aff = AffineKind::None);

// The circle families: node i carries d_i/d circles of length m d'/d_i,
// one per residue class of k mod d_i/d. Affine builds add the node-0
// circles.
std::vector<Circle> circles(const DynkinType& t, int m,
                            AffineKind aff = AffineKind::None);

// Counts per the finite-type circle tables: A/D/E: rank; B: 2*rank-1;
// C: rank+1; F4: 6; G2: 4.
int expected_circle_count(const DynkinType& t);

}  // namespace cw
