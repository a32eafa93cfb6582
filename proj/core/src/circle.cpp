#include "circles/circle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace circles {

GeneralizedCircle GeneralizedCircle::normalized() const {
  const double disc = discriminant();
  if (!(disc > 1e-200)) throw std::invalid_argument("GeneralizedCircle: degenerate (discriminant <= 0)");
  const double s = std::sqrt(disc);
  return {a / s, b / s, c / s};
}

GeneralizedCircle GeneralizedCircle::from_center_radius(Complex center, double radius,
                                                        bool positive_interior) {
  if (!(radius > 0.0)) throw std::invalid_argument("GeneralizedCircle: radius must be positive");
  const double a = (positive_interior ? 1.0 : -1.0) / radius;
  const Complex b = -a * center;
  const double c = a * (std::norm(center) - radius * radius);
  return {a, b, c};
}

GeneralizedCircle GeneralizedCircle::from_line(Complex normal, double offset) {
  const double n = std::abs(normal);
  if (!(n > 0.0)) throw std::invalid_argument("GeneralizedCircle: zero line normal");
  return {0.0, normal / n, -2.0 * offset};
}

GeneralizedCircle GeneralizedCircle::through_points(Complex p1, Complex p2, Complex p3) {
  // Each point gives a linear condition a(x^2+y^2) + 2 bx x + 2 by y + c = 0
  // on (a, bx, by, c); the solution is the 4D generalized cross product of the
  // three rows. Collinear points come out with a = 0 automatically.
  const std::array<Complex, 3> p{p1, p2, p3};
  double m[3][4];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = std::norm(p[i]);
    m[i][1] = 2.0 * p[i].real();
    m[i][2] = 2.0 * p[i].imag();
    m[i][3] = 1.0;
  }
  auto minor_det = [&](int skip) {
    double r[3][3];
    for (int i = 0; i < 3; ++i) {
      int k = 0;
      for (int j = 0; j < 4; ++j) {
        if (j == skip) continue;
        r[i][k++] = m[i][j];
      }
    }
    return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
           r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
           r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
  };
  const double a = minor_det(0);
  const double bx = -minor_det(1);
  const double by = minor_det(2);
  const double c = -minor_det(3);
  return GeneralizedCircle{a, Complex{bx, by}, c}.normalized();
}

CircleGeometry circle_geometry(const GeneralizedCircle& gc) {
  CircleGeometry g;
  if (std::abs(gc.a) <= tol::kAlgebraic) {
    g.kind = CircleKind::line;
    g.signed_curvature = 0.0;
    const double n = std::abs(gc.b);
    g.normal = gc.b / n;
    g.offset = -gc.c / (2.0 * n);
    return g;
  }
  g.kind = CircleKind::circle;
  g.center = -gc.b / gc.a;
  g.radius = 1.0 / std::abs(gc.a);
  g.signed_curvature = gc.a;
  return g;
}

GeneralizedCircle from_geometry(const CircleGeometry& g) {
  if (g.kind == CircleKind::line) return GeneralizedCircle::from_line(g.normal, g.offset);
  return GeneralizedCircle::from_center_radius(g.center, g.radius, g.signed_curvature > 0.0);
}

namespace {

GeneralizedCircle hermitian_transform(const MobiusMap& inv, const GeneralizedCircle& gc) {
  // H' = M* H M for M = inv (the inverse of the acting map).
  const Complex p = inv.a, q = inv.b, r = inv.c, s = inv.d;
  const Complex hb = gc.b;
  // columns of H M
  const Complex t00 = gc.a * p + hb * r;
  const Complex t01 = gc.a * q + hb * s;
  const Complex t10 = std::conj(hb) * p + gc.c * r;
  const Complex t11 = std::conj(hb) * q + gc.c * s;
  const double na = (std::conj(p) * t00 + std::conj(r) * t10).real();
  const Complex nb = std::conj(p) * t01 + std::conj(r) * t11;
  const double nc = (std::conj(q) * t01 + std::conj(s) * t11).real();
  return GeneralizedCircle{na, nb, nc}.normalized();
}

}  // namespace

GeneralizedCircle circle_transform(const MobiusMap& g, const GeneralizedCircle& gc) {
  return hermitian_transform(g.inverse(), gc);
}

GeneralizedCircle circle_transform(const InversiveMap& f, const GeneralizedCircle& gc) {
  // z -> m(conj z): conjugation first, which swaps b and conj(b).
  const GeneralizedCircle pre =
      f.reflects ? GeneralizedCircle{gc.a, std::conj(gc.b), gc.c} : gc;
  return hermitian_transform(f.m.inverse(), pre);
}

InversiveMap inversion_in(const GeneralizedCircle& gc) {
  const CircleGeometry g = circle_geometry(gc);
  if (g.kind == CircleKind::circle) {
    // iota(z) = q + rho^2/conj(z - q) = m(conj z) with m = [[q, rho^2-|q|^2],[1, -conj q]].
    const Complex q = g.center;
    const double rho = g.radius;
    return {MobiusMap::normalized(q, rho * rho - std::norm(q), 1.0, -std::conj(q)), true};
  }
  // Reflection across the line: z -> z - (form value) * n = m(conj z).
  const GeneralizedCircle n = gc.normalized();
  const Complex b = n.b;
  return {MobiusMap::normalized(-b * b, -n.c * b, 0.0, 1.0), true};
}

double point_locus_distance(Complex z, const CircleGeometry& g) {
  if (g.kind == CircleKind::line) return std::abs((std::conj(g.normal) * z).real() - g.offset);
  return std::abs(std::abs(z - g.center) - g.radius);
}

Complex tangency_point(const CircleGeometry& g1, const CircleGeometry& g2) {
  if (g1.kind != CircleKind::circle || g2.kind != CircleKind::circle)
    throw std::invalid_argument("tangency_point: circles only");
  const Complex u = (g2.center - g1.center) / std::abs(g2.center - g1.center);
  const Complex cand1 = g1.center + g1.radius * u;
  const Complex cand2 = g1.center - g1.radius * u;
  const double e1 = point_locus_distance(cand1, g2);
  const double e2 = point_locus_distance(cand2, g2);
  return e1 <= e2 ? cand1 : cand2;
}

}  // namespace circles
