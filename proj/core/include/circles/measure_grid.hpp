#pragma once

#include <vector>

#include "circles/orbit_points.hpp"
#include "circles/packing.hpp"
#include "circles/region.hpp"

namespace circles {

struct GridSpec {
  double x0 = -1.0, y0 = -1.0, x1 = 1.0, y1 = 1.0;
  int nx = 16, ny = 16;

  // Bounding box of the packing's circles expanded by `pad` on each side.
  static GridSpec for_packing(const Packing& p, int nx, int ny, double pad = 0.05);

  bool same_as(const GridSpec& o) const;
  Complex cell_center(int ix, int iy) const;
  // Cell index of a point, or -1 when outside the window.
  int cell_of(Complex z) const;
  int cells() const { return nx * ny; }
};

// Cell-binned nonnegative measure on the grid window.
struct MeasureGrid {
  GridSpec spec;
  std::vector<double> w;  // row-major, iy * nx + ix
  bool normalized = false;
  double raw_total = 0.0;  // mass before normalization

  double total() const;
  void normalize();  // throws EmptySupportError on zero mass
};

// Patterson–Sullivan-side approximation of nu_j: atoms deeper than
// height_cut are projected to their horizontal coordinate and binned with
// weight e^{-s d(j, gamma j)}, then normalized over the window.
MeasureGrid ps_measure_grid(const OrbitPointSet& orbit, double s, double height_cut,
                            const GridSpec& spec);

// d omega = (|z|^2 + 1)^delta d nu_j, evaluated at cell centers, renormalized.
MeasureGrid omega_from_ps(const MeasureGrid& ps, double delta);

// Empirical small-circle measure: unit mass at the center of every circle
// with curvature in [t_lo, t_hi), normalized.
MeasureGrid omega_empirical(const Packing& p, const GridSpec& spec, double t_lo, double t_hi);

struct MeasureComparison {
  double pearson = 0.0;
  double total_variation = 0.0;
};

MeasureComparison compare_measures(const MeasureGrid& m1, const MeasureGrid& m2);

struct ConstantConsistency {
  std::vector<double> constants;  // c_E = N_T(E) / (T^delta * omega(E))
  double spread = 0.0;            // max/min - 1
};

// Region-independence check of the limit constant. Regions are expected to be
// unions of grid cells; omega(E) sums the cells whose centers lie in E.
ConstantConsistency constant_consistency(const Packing& p, std::span<const Region> regions,
                                         double T, double delta, const MeasureGrid& omega);

}  // namespace circles
