#pragma once

#include "circles/counting.hpp"

namespace circles {

// Power-law fit N ~ c * T^delta from a count series.
struct FitResult {
  double exponent = 0.0;   // delta-hat
  double intercept = 0.0;  // log c-hat (natural log)
  double std_error = 0.0;  // standard error of the exponent
  double window_lo = 0.0;
  double window_hi = 0.0;
  int points_used = 0;
};

// Weighted least squares of log N on log T over [window_lo, window_hi],
// weights proportional to sqrt(N) (Poisson-like heuristic). Points with
// N = 0 are skipped. Defaults drop the smallest decade of the grid
// (transient regime). Throws InsufficientDataError with fewer than 4 points.
FitResult fit_exponent(const CountSeries& s, double window_lo = 0.0, double window_hi = 0.0);

}  // namespace circles
