#pragma once

#include <span>

#include "circles/group.hpp"
#include "circles/packing.hpp"

namespace circles {

struct OrbitOptions {
  double curvature_bound = 100.0;
  int max_word_len = 8;
  // When set, a word's subtree is cut once `patience + 1` consecutive
  // extensions kept every seed image at curvature >= bound. Heuristic;
  // validated against the unpruned depth-capped run.
  bool prune = false;
  int patience = 2;
  int workers = 0;  // 0 -> worker_count()
};

// Deduplicated { gamma(C) : |gamma| <= max_word_len, Curv < bound } over all
// seeds, plus the seeds themselves (always retained, as are lines). The
// result is identical — entry order included — for any worker count.
Packing orbit_enumerate(const GroupPresentation& group, std::span<const GeneralizedCircle> seeds,
                        const OrbitOptions& opts);

}  // namespace circles
