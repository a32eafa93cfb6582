#include "circles/bouquet.hpp"

#include <algorithm>
#include <cmath>

namespace circles {

BouquetWitness detect_bouquet(const Packing& p, Complex point, double tol, int min_circles) {
  struct Cand {
    std::size_t idx;
    double radius;
    Complex dir;  // unit vector from point to center
  };
  std::vector<Cand> cands;
  for (std::size_t i = 0; i < p.entries.size(); ++i) {
    const CircleGeometry& g = p.entries[i].geom;
    if (g.kind != CircleKind::circle) continue;
    if (point_locus_distance(point, g) > tol) continue;
    const Complex off = g.center - point;
    const double d = std::abs(off);
    if (d <= tol) continue;  // point at the center, not a tangency
    cands.push_back({i, g.radius, off / d});
  }
  BouquetWitness w;
  if (cands.empty()) return w;

  // Circles tangent at the point from the same side share their center ray.
  // Cluster by direction, then demand strictly decreasing radii with at
  // least a factor-2 overall decay — the finite shadow of "radii tending to 0".
  std::vector<char> used(cands.size(), 0);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (used[i]) continue;
    std::vector<Cand> family;
    for (std::size_t j = 0; j < cands.size(); ++j) {
      if (std::abs(cands[j].dir - cands[i].dir) < 1e-6) {
        family.push_back(cands[j]);
        used[j] = 1;
      }
    }
    if (static_cast<int>(family.size()) < min_circles) continue;
    std::sort(family.begin(), family.end(),
              [](const Cand& a, const Cand& b) { return a.radius > b.radius; });
    bool strict = true;
    for (std::size_t k = 1; k < family.size(); ++k) {
      // Internal tangency at the common point: |c_a - c_b| = r_a - r_b.
      const double want = family[k - 1].radius - family[k].radius;
      const double have = std::abs((family[k - 1].dir * family[k - 1].radius) -
                                   (family[k].dir * family[k].radius));
      if (want <= tol || std::abs(have - want) > 4.0 * tol) {
        strict = false;
        break;
      }
    }
    if (!strict) continue;
    if (family.back().radius > 0.5 * family.front().radius) continue;
    w.found = true;
    for (const Cand& c : family) w.indices.push_back(c.idx);
    return w;
  }
  return w;
}

}  // namespace circles
