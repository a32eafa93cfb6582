#pragma once

#include <cstdint>
#include <vector>

#include "circles/group.hpp"
#include "circles/mobius.hpp"

namespace circles {

// One orbit atom gamma(j): the H^3 point, the (minimal) word length that
// reached it, and the cached distance d(j, gamma j).
struct OrbitAtom {
  Complex z{0.0, 0.0};
  double r = 1.0;
  double dist = 0.0;
  std::int32_t word_len = 0;

  UHPoint point() const { return {z, r}; }
};

struct OrbitPointSet {
  std::vector<OrbitAtom> atoms;  // deduplicated; contains the identity atom
};

// Materializes the orbit of j over the word ball of the presentation.
OrbitPointSet orbit_points(const GroupPresentation& group, int max_word_len, int workers = 0);

// Truncated Poincare series: sum over atoms of e^{-s d(x, gamma j)}.
// Strictly decreasing in s on any nontrivial orbit set.
double poincare_sum(const OrbitPointSet& orbit, double s, const UHPoint& x = UHPoint::base_j());

struct ExponentEstimate {
  double delta = 0.0;
  enum class Method { orbit_growth, circle_count } method = Method::orbit_growth;
  double window_lo = 0.0;
  double window_hi = 0.0;
  std::vector<double> residuals;  // per-sample residuals of the chosen fit
};

// Orbit-growth estimate of the critical exponent: slope of
// log #{gamma : d(j, gamma j) <= R} against R over the largest linear regime.
// The fit never looks past the smallest displacement at the deepest word
// level — beyond that radius a depth-capped ball provably undercounts.
// Requires >= 100 atoms spanning >= 3 units of distance.
ExponentEstimate critical_exponent_orbit(const OrbitPointSet& orbit);

}  // namespace circles
