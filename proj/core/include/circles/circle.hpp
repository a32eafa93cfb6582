#pragma once

#include <complex>

#include "circles/mobius.hpp"

namespace circles {

// Circle-or-line in inversive coordinates: the locus of
//   a|z|^2 + conj(b) z + b conj(z) + c = 0,   a, c real, b complex,
// normalized so the discriminant |b|^2 - ac equals 1. Equivalently the
// Hermitian matrix H = [[a, b], [conj b, c]] with v = (z, 1):  v* H v = 0.
// The sign of a is an orientation: a > 0 bounds the interior (form < 0 side);
// a = 0 is a line ("circle of infinite radius").
struct GeneralizedCircle {
  double a = 1.0;
  Complex b{0.0, 0.0};
  double c = -1.0;

  double discriminant() const { return std::norm(b) - a * c; }

  GeneralizedCircle normalized() const;

  // Circle with given center and radius; positive_interior chooses a > 0
  // (bounded interior) vs a < 0 (interior is the complement).
  static GeneralizedCircle from_center_radius(Complex center, double radius,
                                              bool positive_interior = true);
  // Line { z : Re(conj(n) z) = offset } for a unit normal n (normalized here).
  static GeneralizedCircle from_line(Complex normal, double offset);
  // The unit circle C0, interior = unit disk.
  static GeneralizedCircle unit_circle() { return {1.0, Complex{0.0, 0.0}, -1.0}; }
  // Generalized circle through three distinct points (line if collinear).
  static GeneralizedCircle through_points(Complex p1, Complex p2, Complex p3);

  // Quadratic form value; negative on the interior side.
  double side(Complex z) const {
    return a * std::norm(z) + 2.0 * (std::conj(b) * z).real() + c;
  }
};

enum class CircleKind { circle, line };

// Plain geometric description, the currency of the counting predicates and
// the CSV format. For lines: normal is unit length, locus Re(conj(n) z) = offset.
struct CircleGeometry {
  CircleKind kind = CircleKind::circle;
  Complex center{0.0, 0.0};        // circles only
  double radius = 1.0;             // circles only
  double signed_curvature = 1.0;   // a; 0 for lines
  Complex normal{1.0, 0.0};        // lines only
  double offset = 0.0;             // lines only

  double curvature() const { return kind == CircleKind::line ? 0.0 : std::abs(signed_curvature); }
};

CircleGeometry circle_geometry(const GeneralizedCircle& gc);
GeneralizedCircle from_geometry(const CircleGeometry& g);

// Image circle under a Mobius map: H' = (g^-1)* H (g^-1); a point lies on C
// iff its image lies on the transformed circle, and interiors map to
// interiors (the form value is preserved).
GeneralizedCircle circle_transform(const MobiusMap& g, const GeneralizedCircle& gc);
GeneralizedCircle circle_transform(const InversiveMap& f, const GeneralizedCircle& gc);

// Inversion in a circle (z -> center + r^2 / conj(z - center)) or reflection
// across a line, as a reflecting InversiveMap. Orientation-independent.
InversiveMap inversion_in(const GeneralizedCircle& gc);

// Euclidean distance from a point to the locus.
double point_locus_distance(Complex z, const CircleGeometry& g);

// Tangency point of two tangent circles (internal or external); picks the
// candidate lying closest to both loci.
Complex tangency_point(const CircleGeometry& g1, const CircleGeometry& g2);

}  // namespace circles
