#include "circles/measure_grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circles/counting.hpp"
#include "circles/errors.hpp"

namespace circles {

GridSpec GridSpec::for_packing(const Packing& p, int nx, int ny, double pad) {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
  bool any = false;
  for (const auto& e : p.entries) {
    if (e.geom.kind != CircleKind::circle) continue;
    const Complex c = e.geom.center;
    const double r = e.geom.radius;
    if (!any) {
      x0 = c.real() - r;
      x1 = c.real() + r;
      y0 = c.imag() - r;
      y1 = c.imag() + r;
      any = true;
    } else {
      x0 = std::min(x0, c.real() - r);
      x1 = std::max(x1, c.real() + r);
      y0 = std::min(y0, c.imag() - r);
      y1 = std::max(y1, c.imag() + r);
    }
  }
  if (!any) throw EmptySupportError("GridSpec::for_packing: no circles");
  const double px = (x1 - x0) * pad, py = (y1 - y0) * pad;
  GridSpec s;
  s.x0 = x0 - px;
  s.x1 = x1 + px;
  s.y0 = y0 - py;
  s.y1 = y1 + py;
  s.nx = nx;
  s.ny = ny;
  return s;
}

bool GridSpec::same_as(const GridSpec& o) const {
  return nx == o.nx && ny == o.ny && std::abs(x0 - o.x0) <= 1e-12 && std::abs(x1 - o.x1) <= 1e-12 &&
         std::abs(y0 - o.y0) <= 1e-12 && std::abs(y1 - o.y1) <= 1e-12;
}

Complex GridSpec::cell_center(int ix, int iy) const {
  const double dx = (x1 - x0) / nx, dy = (y1 - y0) / ny;
  return {x0 + (ix + 0.5) * dx, y0 + (iy + 0.5) * dy};
}

int GridSpec::cell_of(Complex z) const {
  const double fx = (z.real() - x0) / (x1 - x0);
  const double fy = (z.imag() - y0) / (y1 - y0);
  if (fx < 0.0 || fx >= 1.0 || fy < 0.0 || fy >= 1.0) return -1;
  const int ix = std::min(nx - 1, static_cast<int>(fx * nx));
  const int iy = std::min(ny - 1, static_cast<int>(fy * ny));
  return iy * nx + ix;
}

double MeasureGrid::total() const {
  double s = 0.0;
  for (double v : w) s += v;
  return s;
}

void MeasureGrid::normalize() {
  const double s = total();
  if (!(s > 0.0)) throw EmptySupportError("MeasureGrid: zero mass");
  raw_total = s;
  for (double& v : w) v /= s;
  normalized = true;
}

MeasureGrid ps_measure_grid(const OrbitPointSet& orbit, double s, double height_cut,
                            const GridSpec& spec) {
  if (!(s > 0.0)) throw std::invalid_argument("ps_measure_grid: s must be positive");
  if (!(height_cut > 0.0) || height_cut > 1.0)
    throw std::invalid_argument("ps_measure_grid: height_cut must lie in (0, 1]");
  MeasureGrid m;
  m.spec = spec;
  m.w.assign(static_cast<std::size_t>(spec.cells()), 0.0);
  bool any_below = false;
  for (const auto& a : orbit.atoms) {
    if (a.r >= height_cut) continue;
    any_below = true;
    const int cell = spec.cell_of(a.z);
    if (cell >= 0) m.w[static_cast<std::size_t>(cell)] += std::exp(-s * a.dist);
  }
  if (!any_below) throw EmptySupportError("ps_measure_grid: no atom below the height cut");
  m.normalize();
  return m;
}

MeasureGrid omega_from_ps(const MeasureGrid& ps, double delta) {
  MeasureGrid m = ps;
  for (int iy = 0; iy < m.spec.ny; ++iy) {
    for (int ix = 0; ix < m.spec.nx; ++ix) {
      const Complex z = m.spec.cell_center(ix, iy);
      m.w[static_cast<std::size_t>(iy * m.spec.nx + ix)] *=
          std::pow(std::norm(z) + 1.0, delta);
    }
  }
  m.normalized = false;
  m.normalize();
  return m;
}

MeasureGrid omega_empirical(const Packing& p, const GridSpec& spec, double t_lo, double t_hi) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo))
    throw std::invalid_argument("omega_empirical: need 0 < t_lo < t_hi");
  if (t_hi > p.curvature_bound * (1.0 + 1e-12)) throw UnderEnumeratedError(t_hi, p.curvature_bound);
  MeasureGrid m;
  m.spec = spec;
  m.w.assign(static_cast<std::size_t>(spec.cells()), 0.0);
  for (const auto& e : p.entries) {
    if (e.geom.kind != CircleKind::circle) continue;
    const double curv = e.geom.curvature();
    if (curv < t_lo || curv >= t_hi) continue;
    const int cell = spec.cell_of(e.geom.center);
    if (cell >= 0) m.w[static_cast<std::size_t>(cell)] += 1.0;
  }
  m.normalize();  // throws EmptySupportError when no circle fell in the window
  return m;
}

MeasureComparison compare_measures(const MeasureGrid& m1, const MeasureGrid& m2) {
  if (!m1.spec.same_as(m2.spec))
    throw GridMismatchError("compare_measures: grids differ in window or dimensions");
  if (m1.w.size() != m2.w.size()) throw GridMismatchError("compare_measures: size mismatch");
  const std::size_t n = m1.w.size();
  double mu1 = 0.0, mu2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mu1 += m1.w[i];
    mu2 += m2.w[i];
  }
  mu1 /= n;
  mu2 /= n;
  double c11 = 0.0, c22 = 0.0, c12 = 0.0, tv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d1 = m1.w[i] - mu1, d2 = m2.w[i] - mu2;
    c11 += d1 * d1;
    c22 += d2 * d2;
    c12 += d1 * d2;
    tv += std::abs(m1.w[i] - m2.w[i]);
  }
  MeasureComparison out;
  out.total_variation = 0.5 * tv;
  out.pearson = (c11 > 0.0 && c22 > 0.0) ? c12 / std::sqrt(c11 * c22) : 0.0;
  return out;
}

ConstantConsistency constant_consistency(const Packing& p, std::span<const Region> regions,
                                         double T, double delta, const MeasureGrid& omega) {
  ConstantConsistency out;
  const double td = std::pow(T, delta);
  for (const Region& region : regions) {
    double mass = 0.0;
    for (int iy = 0; iy < omega.spec.ny; ++iy)
      for (int ix = 0; ix < omega.spec.nx; ++ix)
        if (region.contains(omega.spec.cell_center(ix, iy)))
          mass += omega.w[static_cast<std::size_t>(iy * omega.spec.nx + ix)];
    if (!(mass > 0.0)) throw EmptySupportError("constant_consistency: region has zero omega mass");
    const long n = count(p, region, T, CountMode::meets);
    out.constants.push_back(static_cast<double>(n) / (td * mass));
  }
  if (!out.constants.empty()) {
    const auto [mn, mx] = std::minmax_element(out.constants.begin(), out.constants.end());
    out.spread = *mn > 0.0 ? *mx / *mn - 1.0 : 0.0;
  }
  return out;
}

}  // namespace circles
