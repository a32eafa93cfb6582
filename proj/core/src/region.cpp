#include "circles/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace circles {

namespace {

using Node = Region::Node;
using Kind = Region::Node::Kind;

double dist_point_rect(Complex z, Complex lo, Complex hi) {
  const double dx = std::max({lo.real() - z.real(), 0.0, z.real() - hi.real()});
  const double dy = std::max({lo.imag() - z.imag(), 0.0, z.imag() - hi.imag()});
  return std::hypot(dx, dy);
}

double max_dist_rect(Complex z, Complex lo, Complex hi) {
  const double dx = std::max(std::abs(z.real() - lo.real()), std::abs(z.real() - hi.real()));
  const double dy = std::max(std::abs(z.imag() - lo.imag()), std::abs(z.imag() - hi.imag()));
  return std::hypot(dx, dy);
}

// Does the circle curve meet the primitive? The distance from the circle's
// center to points of E covers [m, M]; the curve meets E iff m <= r <= M.
bool meets_primitive(const Node& n, const CircleGeometry& g) {
  if (g.kind == CircleKind::line) {
    // Signed line value, positive on the normal side.
    auto line_val = [&](Complex z) { return (std::conj(g.normal) * z).real() - g.offset; };
    switch (n.kind) {
      case Kind::rect: {
        const Complex c[4] = {n.a, Complex{n.b.real(), n.a.imag()}, n.b,
                              Complex{n.a.real(), n.b.imag()}};
        double mn = line_val(c[0]), mx = mn;
        for (int i = 1; i < 4; ++i) {
          mn = std::min(mn, line_val(c[i]));
          mx = std::max(mx, line_val(c[i]));
        }
        return mn <= 0.0 && mx >= 0.0;
      }
      case Kind::disk:
        return std::abs(line_val(n.a)) <= n.x;
      case Kind::halfplane: {
        // Non-parallel lines always cross a halfplane boundary.
        const double cross = std::abs((std::conj(n.a) * Complex{-g.normal.imag(), g.normal.real()}).real());
        if (cross > 1e-15) return true;
        const Complex z0 = g.offset * g.normal;  // a point on the line
        return (std::conj(n.a) * z0).real() <= n.x;
      }
      default:
        break;
    }
    return false;
  }
  switch (n.kind) {
    case Kind::rect: {
      const double m = dist_point_rect(g.center, n.a, n.b);
      const double M = max_dist_rect(g.center, n.a, n.b);
      return m <= g.radius && g.radius <= M;
    }
    case Kind::disk: {
      const double d = std::abs(g.center - n.a);
      return std::max(0.0, d - n.x) <= g.radius && g.radius <= d + n.x;
    }
    case Kind::halfplane: {
      const double v = (std::conj(n.a) * g.center).real() - n.x;
      return v <= g.radius;  // max distance within a halfplane is unbounded
    }
    default:
      break;
  }
  return false;
}

bool contains_curve_primitive(const Node& n, const CircleGeometry& g) {
  if (g.kind == CircleKind::line) {
    if (n.kind != Kind::halfplane) return false;  // a line never fits a bounded primitive
    const double cross = std::abs((std::conj(n.a) * Complex{-g.normal.imag(), g.normal.real()}).real());
    if (cross > 1e-15) return false;
    const Complex z0 = g.offset * g.normal;
    return (std::conj(n.a) * z0).real() <= n.x;
  }
  switch (n.kind) {
    case Kind::rect:
      return g.center.real() - g.radius >= n.a.real() && g.center.real() + g.radius <= n.b.real() &&
             g.center.imag() - g.radius >= n.a.imag() && g.center.imag() + g.radius <= n.b.imag();
    case Kind::disk:
      return std::abs(g.center - n.a) + g.radius <= n.x;
    case Kind::halfplane:
      return (std::conj(n.a) * g.center).real() + g.radius <= n.x;
    default:
      break;
  }
  return false;
}

}  // namespace

Region Region::rectangle(Complex lo, Complex hi) {
  if (!(lo.real() <= hi.real()) || !(lo.imag() <= hi.imag()))
    throw std::invalid_argument("Region::rectangle: corners out of order");
  auto n = std::make_shared<Node>();
  n->kind = Kind::rect;
  n->a = lo;
  n->b = hi;
  return Region(std::move(n));
}

Region Region::disk(Complex center, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("Region::disk: radius must be positive");
  auto n = std::make_shared<Node>();
  n->kind = Kind::disk;
  n->a = center;
  n->x = radius;
  return Region(std::move(n));
}

Region Region::halfplane(Complex normal, double offset) {
  const double m = std::abs(normal);
  if (!(m > 0.0)) throw std::invalid_argument("Region::halfplane: zero normal");
  auto n = std::make_shared<Node>();
  n->kind = Kind::halfplane;
  n->a = normal / m;
  n->x = offset / m;
  return Region(std::move(n));
}

Region Region::union_of(std::vector<Region> parts) {
  if (parts.empty()) throw std::invalid_argument("Region::union_of: empty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::unite;
  n->parts = std::move(parts);
  return Region(std::move(n));
}

Region Region::intersection_of(std::vector<Region> parts) {
  if (parts.empty()) throw std::invalid_argument("Region::intersection_of: empty");
  auto n = std::make_shared<Node>();
  n->kind = Kind::intersect;
  n->parts = std::move(parts);
  return Region(std::move(n));
}

Region Region::complement(Region inner) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::complement;
  n->parts.push_back(std::move(inner));
  return Region(std::move(n));
}

bool Region::contains(Complex z) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::rect:
      return z.real() >= n.a.real() && z.real() <= n.b.real() && z.imag() >= n.a.imag() &&
             z.imag() <= n.b.imag();
    case Kind::disk:
      return std::abs(z - n.a) <= n.x;
    case Kind::halfplane:
      return (std::conj(n.a) * z).real() <= n.x;
    case Kind::unite:
      for (const Region& r : n.parts)
        if (r.contains(z)) return true;
      return false;
    case Kind::intersect:
      for (const Region& r : n.parts)
        if (!r.contains(z)) return false;
      return true;
    case Kind::complement:
      return !n.parts[0].contains(z);
  }
  return false;
}

bool Region::meets(const CircleGeometry& g) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::unite:
      for (const Region& r : n.parts)
        if (r.meets(g)) return true;
      return false;
    case Kind::intersect:
      for (const Region& r : n.parts)
        if (!r.meets(g)) return false;
      return true;
    case Kind::complement:
      return !n.parts[0].contains_curve(g);
    default:
      return meets_primitive(n, g);
  }
}

bool Region::contains_curve(const CircleGeometry& g) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::unite:
      for (const Region& r : n.parts)
        if (r.contains_curve(g)) return true;
      return false;
    case Kind::intersect:
      for (const Region& r : n.parts)
        if (!r.contains_curve(g)) return false;
      return true;
    case Kind::complement:
      return !n.parts[0].meets(g);
    default:
      return contains_curve_primitive(n, g);
  }
}

Region Region::transformed(double lambda, Complex shift) const {
  if (!(lambda > 0.0)) throw std::invalid_argument("Region::transformed: lambda must be positive");
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::rect:
      return rectangle(lambda * n.a + shift, lambda * n.b + shift);
    case Kind::disk:
      return disk(lambda * n.a + shift, lambda * n.x);
    case Kind::halfplane:
      return halfplane(n.a, lambda * n.x + (std::conj(n.a) * shift).real());
    case Kind::unite:
    case Kind::intersect: {
      std::vector<Region> parts;
      parts.reserve(n.parts.size());
      for (const Region& r : n.parts) parts.push_back(r.transformed(lambda, shift));
      return n.kind == Kind::unite ? union_of(std::move(parts)) : intersection_of(std::move(parts));
    }
    case Kind::complement:
      return complement(n.parts[0].transformed(lambda, shift));
  }
  throw std::logic_error("Region::transformed: unreachable");
}

bool Region::bounded() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::rect:
    case Kind::disk:
      return true;
    case Kind::halfplane:
    case Kind::complement:
      return false;  // conservative
    case Kind::unite:
      for (const Region& r : n.parts)
        if (!r.bounded()) return false;
      return true;
    case Kind::intersect:
      for (const Region& r : n.parts)
        if (r.bounded()) return true;
      return false;
  }
  return false;
}

}  // namespace circles
