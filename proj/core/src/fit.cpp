#include "circles/fit.hpp"

#include <cmath>
#include <vector>

#include "circles/errors.hpp"

namespace circles {

FitResult fit_exponent(const CountSeries& s, double window_lo, double window_hi) {
  if (s.t.empty()) throw InsufficientDataError("fit_exponent: empty series");
  if (window_lo <= 0.0) window_lo = s.t.front() * 10.0;  // drop the first decade
  if (window_hi <= 0.0) window_hi = s.t.back();
  if (window_lo > s.t.back()) window_lo = s.t.front();

  std::vector<double> x, y, w;
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    if (s.t[i] < window_lo || s.t[i] > window_hi || s.n[i] <= 0) continue;
    x.push_back(std::log(s.t[i]));
    y.push_back(std::log(static_cast<double>(s.n[i])));
    w.push_back(std::sqrt(static_cast<double>(s.n[i])));
  }
  const int n = static_cast<int>(x.size());
  if (n < 4)
    throw InsufficientDataError("fit_exponent: fewer than 4 usable points in window");

  double sw = 0.0, swx = 0.0, swy = 0.0;
  for (int i = 0; i < n; ++i) {
    sw += w[i];
    swx += w[i] * x[i];
    swy += w[i] * y[i];
  }
  const double xbar = swx / sw, ybar = swy / sw;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += w[i] * (x[i] - xbar) * (x[i] - xbar);
    sxy += w[i] * (x[i] - xbar) * (y[i] - ybar);
  }
  if (!(sxx > 0.0)) throw InsufficientDataError("fit_exponent: degenerate window");

  FitResult r;
  r.exponent = sxy / sxx;
  r.intercept = ybar - r.exponent * xbar;
  double rss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double res = y[i] - r.intercept - r.exponent * x[i];
    rss += w[i] * res * res;
  }
  r.std_error = n > 2 ? std::sqrt(rss / (n - 2) / sxx) : 0.0;
  r.window_lo = window_lo;
  r.window_hi = window_hi;
  r.points_used = n;
  return r;
}

}  // namespace circles
