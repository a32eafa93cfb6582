#pragma once

#include <cstddef>
#include <vector>

#include "circles/packing.hpp"

namespace circles {

struct BouquetWitness {
  bool found = false;
  // Indices into the packing of one internally-tangent family at the point.
  std::vector<std::size_t> indices;
};

// Finite-data heuristic for an infinite bouquet at `point`: true iff at least
// min_circles circles pass within tol of the point, are pairwise internally
// tangent there (their centers lie on a common ray from the point) and their
// radii decrease strictly, shrinking by at least half overall.
BouquetWitness detect_bouquet(const Packing& p, Complex point, double tol, int min_circles = 5);

}  // namespace circles
