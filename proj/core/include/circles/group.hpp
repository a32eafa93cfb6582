#pragma once

#include <span>
#include <string>
#include <vector>

#include "circles/circle.hpp"
#include "circles/descartes.hpp"
#include "circles/mobius.hpp"

namespace circles {

// A generator of a discrete group of inversive maps. Involution-flagged
// generators square to the identity (circle inversions); they are their own
// inverses for word enumeration.
struct Generator {
  InversiveMap map;
  bool involution = false;
  std::string label;
};

struct GroupPresentation {
  std::vector<Generator> generators;

  // Checks normalization of every generator and g^2 = ±id for the
  // involution-flagged ones. Throws std::invalid_argument on failure.
  void validate() const;
};

struct SchottkyPair {
  Complex center1;
  double radius1;
  Complex center2;
  double radius2;
};

struct SchottkyGroup {
  GroupPresentation group;
  std::vector<GeneralizedCircle> seeds;  // the 2k boundary circles
};

// Builds k loxodromic generators pairing each disk D_i with D_i'
// (interior of D_i -> exterior of D_i'), plus the boundary circles as seeds.
// Rejects overlapping or tangent disks.
SchottkyGroup schottky_build(std::span<const SchottkyPair> pairs);

// The four inversions in the dual circles of a Descartes quadruple; their
// orbit of the quadruple circles is the full packing.
GroupPresentation dual_circle_group(const DescartesQuadruple& q);

}  // namespace circles
