#pragma once

#include <span>
#include <vector>

#include "circles/packing.hpp"
#include "circles/region.hpp"

namespace circles {

// Counting predicate for N_T(P, E):
//   meets     — the circle curve intersects E (the paper's N_T),
//   center    — the circle's center lies in E (the dual count of Prop. tran;
//               lines, having no center, are never counted),
//   contained — the whole curve lies inside E.
enum class CountMode { meets, center, contained };

// Exact count of circles with Curv < T satisfying the mode predicate.
// Throws UnderEnumeratedError when T exceeds the packing's enumeration bound.
long count(const Packing& p, const Region& region, double T, CountMode mode);

struct CountSeries {
  std::vector<double> t;
  std::vector<long> n;
  CountMode mode = CountMode::meets;
};

// Pointwise count over a strictly increasing grid; grid points evaluate in
// parallel with deterministic aggregation.
CountSeries count_series(const Packing& p, const Region& region, std::span<const double> grid,
                         CountMode mode = CountMode::meets);

// Geometric grid ending at tmax: tmax * ratio^(i - points + 1).
std::vector<double> default_tgrid(double tmax, int points = 25, double ratio = 1.4142135623730951);

struct RatioPoint {
  double t = 0.0;
  double ratio = 0.0;
  bool valid = false;  // false when the denominator count was zero
};

struct RatioSeries {
  std::vector<RatioPoint> points;
  double last = 0.0;   // ratio at the largest grid point
  double drift = 0.0;  // (max - min over the final T-decade) / |last|
};

RatioSeries ratio_series(const Packing& p, const Region& e1, const Region& e2,
                         std::span<const double> grid);

struct GapPoint {
  double t = 0.0;
  long gap = 0;
};

struct GapSeries {
  std::vector<GapPoint> points;
  long max_gap = 0;
};

// |N_meets - N_center| per grid point. Boundedness of this gap while N grows
// is the empirical surrogate for admissibility.
GapSeries dual_count_gap(const Packing& p, const Region& region, std::span<const double> grid);

}  // namespace circles
