#include "circles/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circles/errors.hpp"
#include "circles/threads.hpp"

namespace circles {

namespace {

bool passes(const CircleGeometry& g, const Region& region, CountMode mode) {
  switch (mode) {
    case CountMode::meets:
      return region.meets(g);
    case CountMode::center:
      return g.kind == CircleKind::circle && region.contains(g.center);
    case CountMode::contained:
      return region.contains_curve(g);
  }
  return false;
}

void check_enumerated(const Packing& p, double T) {
  if (T > p.curvature_bound * (1.0 + 1e-12))
    throw UnderEnumeratedError(T, p.curvature_bound);
}

}  // namespace

long count(const Packing& p, const Region& region, double T, CountMode mode) {
  check_enumerated(p, T);
  long n = 0;
  for (const auto& e : p.entries) {
    if (!(e.geom.curvature() < T)) continue;
    if (passes(e.geom, region, mode)) ++n;
  }
  return n;
}

CountSeries count_series(const Packing& p, const Region& region, std::span<const double> grid,
                         CountMode mode) {
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw std::invalid_argument("count_series: grid must increase");
  if (!grid.empty()) check_enumerated(p, grid.back());
  CountSeries s;
  s.mode = mode;
  s.t.assign(grid.begin(), grid.end());
  s.n.assign(grid.size(), 0);
  parallel_chunks(grid.size(), 0, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) s.n[i] = count(p, region, grid[i], mode);
  });
  return s;
}

std::vector<double> default_tgrid(double tmax, int points, double ratio) {
  if (!(tmax > 0.0) || points < 1 || !(ratio > 1.0))
    throw std::invalid_argument("default_tgrid: bad parameters");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = tmax * std::pow(ratio, i - points + 1);
  return g;
}

RatioSeries ratio_series(const Packing& p, const Region& e1, const Region& e2,
                         std::span<const double> grid) {
  const CountSeries s1 = count_series(p, e1, grid, CountMode::meets);
  const CountSeries s2 = count_series(p, e2, grid, CountMode::meets);
  RatioSeries out;
  out.points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    RatioPoint pt;
    pt.t = grid[i];
    if (s2.n[i] > 0) {
      pt.ratio = static_cast<double>(s1.n[i]) / static_cast<double>(s2.n[i]);
      pt.valid = true;
    }
    out.points.push_back(pt);
  }
  // Last value and drift over the final decade of T.
  for (auto it = out.points.rbegin(); it != out.points.rend(); ++it) {
    if (it->valid) {
      out.last = it->ratio;
      break;
    }
  }
  if (!out.points.empty()) {
    const double t_hi = out.points.back().t;
    double mn = out.last, mx = out.last;
    bool any = false;
    for (const auto& pt : out.points) {
      if (!pt.valid || pt.t < t_hi / 10.0) continue;
      mn = any ? std::min(mn, pt.ratio) : pt.ratio;
      mx = any ? std::max(mx, pt.ratio) : pt.ratio;
      any = true;
    }
    if (any && out.last != 0.0) out.drift = (mx - mn) / std::abs(out.last);
  }
  return out;
}

GapSeries dual_count_gap(const Packing& p, const Region& region, std::span<const double> grid) {
  const CountSeries meets = count_series(p, region, grid, CountMode::meets);
  const CountSeries centers = count_series(p, region, grid, CountMode::center);
  GapSeries out;
  out.points.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const long gap = std::labs(meets.n[i] - centers.n[i]);
    out.points.push_back({grid[i], gap});
    out.max_gap = std::max(out.max_gap, gap);
  }
  return out;
}

}  // namespace circles
