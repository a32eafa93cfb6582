#include "circles/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace circles {

RenderStyle RenderStyle::preset(const std::string& name) {
  RenderStyle s;
  if (name == "outline" || name.empty()) return s;
  if (name == "filled") {
    s.fill = "#dfe7f5";
    return s;
  }
  throw std::invalid_argument("unknown render style: " + name);
}

std::string render_svg(const Packing& p, const RenderStyle& style) {
  double x0 = -1.0, y0 = -1.0, x1 = 1.0, y1 = 1.0;
  bool any = false;
  for (const auto& e : p.entries) {
    if (e.geom.kind != CircleKind::circle) continue;
    const double cx = e.geom.center.real(), cy = e.geom.center.imag(), r = e.geom.radius;
    if (!any) {
      x0 = cx - r;
      x1 = cx + r;
      y0 = cy - r;
      y1 = cy + r;
      any = true;
    } else {
      x0 = std::min(x0, cx - r);
      x1 = std::max(x1, cx + r);
      y0 = std::min(y0, cy - r);
      y1 = std::max(y1, cy + r);
    }
  }
  const double pad = any ? 0.02 * std::max(x1 - x0, y1 - y0) : 0.0;
  x0 -= pad;
  x1 += pad;
  y0 -= pad;
  y1 += pad;
  const double w = x1 - x0, h = y1 - y0;
  const double sw = style.stroke_width_frac * std::hypot(w, h);

  std::ostringstream out;
  out.precision(10);
  // SVG y grows downward; emit flipped y so the plane reads correctly.
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << style.size_px << "\" height=\""
      << static_cast<int>(style.size_px * h / w) << "\" viewBox=\"" << x0 << ' ' << -y1 << ' ' << w
      << ' ' << h << "\">\n";
  for (const auto& e : p.entries) {
    if (e.geom.kind == CircleKind::circle) {
      out << "<circle cx=\"" << e.geom.center.real() << "\" cy=\"" << -e.geom.center.imag()
          << "\" r=\"" << e.geom.radius << "\" fill=\"" << style.fill << "\" stroke=\""
          << style.stroke << "\" stroke-width=\"" << sw << "\"/>\n";
    } else {
      // Clip the line to the window; an off-window line degenerates to a
      // corner point so the element count still matches the row count.
      const Complex n = e.geom.normal;
      const Complex dir{-n.imag(), n.real()};
      const Complex base = e.geom.offset * n;
      double tmin = -1e18, tmax = 1e18;
      auto clip = [&](double p0, double d, double lo, double hi) {
        if (std::abs(d) < 1e-15) {
          if (p0 < lo || p0 > hi) tmin = 1.0, tmax = 0.0;
          return;
        }
        double t0 = (lo - p0) / d, t1 = (hi - p0) / d;
        if (t0 > t1) std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
      };
      clip(base.real(), dir.real(), x0, x1);
      clip(base.imag(), dir.imag(), y0, y1);
      Complex a = base + tmin * dir, b = base + tmax * dir;
      if (tmin > tmax) a = b = Complex{x0, y0};
      out << "<line x1=\"" << a.real() << "\" y1=\"" << -a.imag() << "\" x2=\"" << b.real()
          << "\" y2=\"" << -b.imag() << "\" stroke=\"" << style.stroke << "\" stroke-width=\""
          << sw << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace circles
