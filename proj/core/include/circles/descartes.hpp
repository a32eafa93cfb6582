#pragma once

#include <array>

#include "circles/circle.hpp"
#include "circles/packing.hpp"

namespace circles {

// Four pairwise tangent circles in curvature / curvature-times-center
// coordinates. Both quadratic relations
//   (sum k)^2 = 2 sum k^2       and      (sum w)^2 = 2 sum w^2
// hold, where w_i = k_i * center_i (unit normal for a line, k = 0).
struct DescartesQuadruple {
  std::array<double, 4> k{};
  std::array<Complex, 4> w{};

  double curvature_residual() const;
  double center_residual() const;
  bool satisfies_relations(double tolerance) const;

  // Materializes entry i as an oriented circle. Lines (k = 0) cannot be
  // positioned from (0, normal) alone and are rejected.
  GeneralizedCircle circle(int i) const;

  // Canonical planar realization of four curvatures satisfying the Descartes
  // relation: first circle centered at the origin, second on the negative
  // real axis, third with Im >= 0, fourth with Im >= 0 among the two choices.
  static DescartesQuadruple realize(const std::array<double, 4>& curvatures);
};

// Solution swap of the Descartes quadratic in slot i:
//   k_i' = 2 (sum of the others) - k_i, and the same for w. An involution.
DescartesQuadruple descartes_reflect(const DescartesQuadruple& q, int i);

// All circles of the packing generated from the root quadruple with curvature
// below T, reached by non-backtracking reflections, deduplicated; the four
// root circles are always retained. Provenance records the reflection depth
// and the replaced circle.
Packing apollonian_enumerate(const DescartesQuadruple& root, double T);

// The four dual circles (each through the tangency points of one triple,
// orthogonal to it). Inversions in these generate the packing's symmetry
// group; the gasket's dual for a collinear tangency triple is a line.
std::array<GeneralizedCircle, 4> dual_circles(const DescartesQuadruple& q);

}  // namespace circles
