#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "circles/circle.hpp"

namespace circles {

// Canonical dedup key: the normalized (a, Re b, Im b, c) with the orientation
// folded out (so a circle and its reversed orientation collide), quantized to
// the tol::kDedupGrid lattice.
using CanonicalKey = std::array<std::int64_t, 4>;

struct CanonicalKeyHash {
  std::size_t operator()(const CanonicalKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::int64_t v : k) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

CanonicalKey canonical_key(const GeneralizedCircle& gc);

// All keys the circle could legitimately live under: the primary key plus
// neighbor cells when a quantized coordinate sits within 1% of a cell
// boundary. Guards dedup against representations straddling the grid.
void candidate_keys(const GeneralizedCircle& gc, std::vector<CanonicalKey>& out);

struct PackedCircle {
  GeneralizedCircle gc;
  CircleGeometry geom;     // cached; the counting predicates live on this
  std::int32_t word_len = 0;
  std::int32_t parent = -1;
};

// Deduplicated finite circle set enumerated from a group orbit, with
// provenance and the curvature bound it was enumerated to.
struct Packing {
  std::vector<PackedCircle> entries;
  double curvature_bound = 0.0;
  std::string source;
  // Diagnostics: max Descartes residuals over all visited quadruples
  // (apollonian route only), and dedup lookups that matched a key whose
  // stored circle is suspiciously far (possible tolerance misconfiguration).
  double max_curvature_residual = 0.0;
  double max_center_residual = 0.0;
  std::uint64_t suspect_collisions = 0;

  std::size_t size() const { return entries.size(); }

  void add(const GeneralizedCircle& gc, std::int32_t word_len, std::int32_t parent) {
    entries.push_back({gc, circle_geometry(gc), word_len, parent});
  }

  // Sorts entries by (signed curvature, cx, cy, ...) and remaps parents.
  void canonical_sort();

  std::vector<CanonicalKey> sorted_keys() const;
};

bool set_equal(const Packing& p1, const Packing& p2);

// Insert-if-absent index over canonical keys with boundary probing.
class DedupIndex {
 public:
  // Returns the index the circle lives at; inserted is set when it was new.
  std::uint32_t insert(const GeneralizedCircle& gc, std::uint32_t idx, bool& inserted);
  // Lookup only; returns false if absent.
  bool find(const GeneralizedCircle& gc, std::uint32_t& idx) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<CanonicalKey, std::uint32_t, CanonicalKeyHash> map_;
  mutable std::vector<CanonicalKey> scratch_;
};

// True when two coefficient vectors that share a dedup key are farther apart
// than numerical noise explains — a sign the grid is mis-tuned for the input.
bool suspicious_match(const GeneralizedCircle& g1, const GeneralizedCircle& g2);

// Applies the similarity z -> lambda z + shift (as the Mobius map
// n_shift a_{log lambda}) to every circle; the curvature bound rescales to
// bound/lambda. Realizes the rescaling covariance used by the scaling tests.
Packing scale_packing(const Packing& p, double lambda, Complex shift = Complex{0.0, 0.0});

}  // namespace circles
