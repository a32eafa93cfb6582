#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "circles/tolerances.hpp"

namespace circles {

using Complex = std::complex<double>;

// Point of the extended plane C ∪ {∞}. Infinity is a tagged value, never a
// large float; poles are branched explicitly.
class ExtComplex {
 public:
  ExtComplex() = default;
  ExtComplex(Complex v) : v_(v) {}            // NOLINT: implicit by design
  ExtComplex(double v) : v_(v, 0.0) {}        // NOLINT
  static ExtComplex infinity() {
    ExtComplex e;
    e.inf_ = true;
    return e;
  }
  bool is_infinity() const { return inf_; }
  Complex value() const { return v_; }  // only meaningful when finite

 private:
  Complex v_{0.0, 0.0};
  bool inf_ = false;
};

// Element of PSL2(C): a normalized 2x2 complex matrix, determinant 1,
// canonical projective sign (first nonzero entry in (a,b,c,d) scan order has
// nonnegative real part; imaginary part breaks ties).
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  static MobiusMap normalized(Complex a, Complex b, Complex c, Complex d) {
    const Complex det = a * d - b * c;
    if (std::abs(det) < 1e-100) throw std::invalid_argument("MobiusMap: singular matrix");
    const Complex s = std::sqrt(det);
    MobiusMap g{a / s, b / s, c / s, d / s};
    g.fix_projective_sign();
    return g;
  }

  static MobiusMap identity() { return {}; }
  // a_t = diag(e^{t/2}, e^{-t/2}); z -> e^t z.
  static MobiusMap dilation(double t) { return {std::exp(t / 2.0), 0.0, 0.0, std::exp(-t / 2.0)}; }
  // n_w: z -> z + w.
  static MobiusMap translation(Complex w) { return {1.0, w, 0.0, 1.0}; }
  // n_w^-: lower unipotent.
  static MobiusMap lower_translation(Complex w) { return {1.0, 0.0, w, 1.0}; }
  // diag(e^{i theta}, e^{-i theta}); z -> e^{2 i theta} z.
  static MobiusMap rotation(double theta) {
    const Complex e = std::polar(1.0, theta);
    return {e, 0.0, 0.0, std::conj(e)};
  }
  // Element of PSU(2): [[alpha, beta], [-conj(beta), conj(alpha)]].
  static MobiusMap su2(Complex alpha, Complex beta) {
    return normalized(alpha, beta, -std::conj(beta), std::conj(alpha));
  }

  double det_residual() const { return std::abs(a * d - b * c - 1.0); }

  MobiusMap inverse() const {
    MobiusMap g{d, -b, -c, a};  // adjugate; det already 1
    g.fix_projective_sign();
    return g;
  }

  void fix_projective_sign() {
    const double m = std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    const Complex* entries[4] = {&a, &b, &c, &d};
    for (const Complex* e : entries) {
      if (std::abs(*e) <= 1e-9 * m) continue;
      const bool flip = (e->real() < -1e-12 * m) ||
                        (std::abs(e->real()) <= 1e-12 * m && e->imag() < 0.0);
      if (flip) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
      }
      return;
    }
  }
};

// compose(g1, g2) applies g2 first: (g1∘g2)(z) = g1(g2(z)).
inline MobiusMap compose(const MobiusMap& g1, const MobiusMap& g2) {
  return MobiusMap::normalized(g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
                               g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d);
}

inline MobiusMap operator*(const MobiusMap& g1, const MobiusMap& g2) { return compose(g1, g2); }

// Projective comparison: M and -M are the same element.
inline bool projective_equal(const MobiusMap& g, const MobiusMap& h, double tol = tol::kAlgebraic) {
  auto diff = [&](double sign) {
    return std::max(std::max(std::abs(g.a - sign * h.a), std::abs(g.b - sign * h.b)),
                    std::max(std::abs(g.c - sign * h.c), std::abs(g.d - sign * h.d)));
  };
  return std::min(diff(1.0), diff(-1.0)) <= tol;
}

inline ExtComplex apply_boundary(const MobiusMap& g, const ExtComplex& z) {
  const double scale = std::abs(g.a) + std::abs(g.b) + std::abs(g.c) + std::abs(g.d);
  if (z.is_infinity()) {
    if (std::abs(g.c) <= 1e-13 * scale) return ExtComplex::infinity();
    return ExtComplex(g.a / g.c);
  }
  const Complex num = g.a * z.value() + g.b;
  const Complex den = g.c * z.value() + g.d;
  const double local = std::abs(g.c) * std::abs(z.value()) + std::abs(g.d);
  if (std::abs(den) <= 1e-14 * (local + 1e-300)) return ExtComplex::infinity();
  return ExtComplex(num / den);
}

// Point z + rj of upper half-space H^3, r > 0.
struct UHPoint {
  Complex z{0.0, 0.0};
  double r = 1.0;
  // The distinguished base point j = (0, 1).
  static UHPoint base_j() { return {Complex{0.0, 0.0}, 1.0}; }
};

// Isometric action on H^3 via the Poincare extension:
//   g(z+rj) = [(az+b)(conj(cz+d)) + a conj(c) r^2 + rj] / (|cz+d|^2 + |c|^2 r^2).
inline UHPoint apply_h3(const MobiusMap& g, const UHPoint& x) {
  const Complex czd = g.c * x.z + g.d;
  const double den = std::norm(czd) + std::norm(g.c) * x.r * x.r;
  const Complex num = (g.a * x.z + g.b) * std::conj(czd) + g.a * std::conj(g.c) * x.r * x.r;
  return {num / den, x.r / den};
}

// cosh d(z1+r1 j, z2+r2 j) = (|z1-z2|^2 + r1^2 + r2^2) / (2 r1 r2),
// evaluated through acosh(1+u) = log1p(u + sqrt(u(u+2))) for stability near 0.
inline double hyp_dist(const UHPoint& x, const UHPoint& y) {
  const double u = (std::norm(x.z - y.z) + (x.r - y.r) * (x.r - y.r)) / (2.0 * x.r * y.r);
  return std::log1p(u + std::sqrt(u * (u + 2.0)));
}

// Busemann cocycle beta_zeta(x, y), signed horospherical distance. Uses
// beta_zeta(p+rj, zeta+j) = log((|zeta-p|^2 + r^2)/r); the difference of the
// two one-sided terms makes the cocycle identity exact in floating point.
inline double busemann(const ExtComplex& zeta, const UHPoint& x, const UHPoint& y) {
  if (zeta.is_infinity()) return std::log(y.r / x.r);
  const double fx = (std::norm(zeta.value() - x.z) + x.r * x.r) / x.r;
  const double fy = (std::norm(zeta.value() - y.z) + y.r * y.r) / y.r;
  return std::log(fx) - std::log(fy);
}

// Conformal map of C-hat that may reverse orientation: z -> m(z) or m(conj z).
// Inversions in circles (the paper's dual-circle generators) are the
// reflecting case; products of two inversions are plain Mobius maps.
struct InversiveMap {
  MobiusMap m;
  bool reflects = false;

  static InversiveMap identity() { return {MobiusMap::identity(), false}; }

  InversiveMap inverse() const {
    if (!reflects) return {m.inverse(), false};
    const MobiusMap inv = m.inverse();
    return {MobiusMap::normalized(std::conj(inv.a), std::conj(inv.b), std::conj(inv.c),
                                  std::conj(inv.d)),
            true};
  }
};

inline MobiusMap conj_entries(const MobiusMap& g) {
  return MobiusMap::normalized(std::conj(g.a), std::conj(g.b), std::conj(g.c), std::conj(g.d));
}

// (f∘g)(z) = f(g(z)); the reflection flag composes through the conjugated
// matrix: f.m ∘ conj ∘ g.m = f.m ∘ conj(g.m) ∘ conj.
inline InversiveMap compose(const InversiveMap& f, const InversiveMap& g) {
  const MobiusMap rhs = f.reflects ? conj_entries(g.m) : g.m;
  return {compose(f.m, rhs), f.reflects != g.reflects};
}

inline InversiveMap operator*(const InversiveMap& f, const InversiveMap& g) { return compose(f, g); }

inline ExtComplex apply_boundary(const InversiveMap& f, const ExtComplex& z) {
  if (!f.reflects || z.is_infinity()) return apply_boundary(f.m, z);
  return apply_boundary(f.m, ExtComplex(std::conj(z.value())));
}

// Poincare extension of conj is (z, r) -> (conj z, r), an isometry.
inline UHPoint apply_h3(const InversiveMap& f, const UHPoint& x) {
  if (!f.reflects) return apply_h3(f.m, x);
  return apply_h3(f.m, UHPoint{std::conj(x.z), x.r});
}

inline bool projective_equal(const InversiveMap& f, const InversiveMap& g,
                             double tol = tol::kAlgebraic) {
  return f.reflects == g.reflects && projective_equal(f.m, g.m, tol);
}

}  // namespace circles
