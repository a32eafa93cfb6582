#include "circles/group.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "circles/tolerances.hpp"

namespace circles {

void GroupPresentation::validate() const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Generator& g = generators[i];
    if (g.map.m.det_residual() > tol::kAlgebraic)
      throw std::invalid_argument("generator " + std::to_string(i) + " is not normalized");
    if (g.involution) {
      const InversiveMap sq = compose(g.map, g.map);
      if (sq.reflects || !projective_equal(sq.m, MobiusMap::identity(), tol::kInvolution))
        throw std::invalid_argument("generator " + std::to_string(i) +
                                    " is flagged involutive but g^2 != identity");
    }
  }
}

SchottkyGroup schottky_build(std::span<const SchottkyPair> pairs) {
  if (pairs.empty()) throw std::invalid_argument("schottky_build: no pairs");
  struct Disk {
    Complex c;
    double r;
  };
  std::vector<Disk> disks;
  for (const auto& p : pairs) {
    if (!(p.radius1 > 0.0) || !(p.radius2 > 0.0))
      throw std::invalid_argument("schottky_build: radii must be positive");
    disks.push_back({p.center1, p.radius1});
    disks.push_back({p.center2, p.radius2});
  }
  for (std::size_t i = 0; i < disks.size(); ++i) {
    for (std::size_t j = i + 1; j < disks.size(); ++j) {
      const double sep = std::abs(disks[i].c - disks[j].c);
      if (sep <= disks[i].r + disks[j].r + tol::kTangency)
        throw std::invalid_argument("schottky_build: disks " + std::to_string(i) + " and " +
                                    std::to_string(j) + " overlap or are tangent");
    }
  }

  SchottkyGroup out;
  int idx = 0;
  for (const auto& p : pairs) {
    // gamma(z) = q' - u^2 rho rho' / (z - q): fixes the axis through the
    // centers, sends int D -> ext D', and is loxodromic for disjoint disks.
    const Complex q = p.center1, qp = p.center2;
    const double rho = p.radius1, rhop = p.radius2;
    const Complex u = (qp - q) / std::abs(qp - q);
    const MobiusMap m =
        MobiusMap::normalized(qp, -(qp * q + u * u * rho * rhop), 1.0, -q);
    Generator g;
    g.map = {m, false};
    g.involution = false;
    g.label = "g" + std::to_string(idx++);
    out.group.generators.push_back(g);
    out.seeds.push_back(GeneralizedCircle::from_center_radius(q, rho));
    out.seeds.push_back(GeneralizedCircle::from_center_radius(qp, rhop));
  }
  out.group.validate();
  return out;
}

GroupPresentation dual_circle_group(const DescartesQuadruple& q) {
  const auto duals = dual_circles(q);
  GroupPresentation g;
  for (int i = 0; i < 4; ++i) {
    Generator gen;
    gen.map = inversion_in(duals[i]);
    gen.involution = true;
    gen.label = "s" + std::to_string(i);
    g.generators.push_back(gen);
  }
  g.validate();
  return g;
}

}  // namespace circles
