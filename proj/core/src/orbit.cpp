#include "circles/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "circles/threads.hpp"
#include "circles/tolerances.hpp"

namespace circles {

namespace {

struct Letter {
  InversiveMap map;
  int inverse = 0;  // index of the inverse letter
};

// Generators plus inverses of the non-involutions; inverse[] makes the
// non-backtracking ban (never undo the last letter) a single comparison.
std::vector<Letter> make_alphabet(const GroupPresentation& group) {
  std::vector<Letter> letters;
  for (const auto& gen : group.generators) {
    if (gen.involution) {
      const int self = static_cast<int>(letters.size());
      letters.push_back({gen.map, self});
    } else {
      const int fwd = static_cast<int>(letters.size());
      letters.push_back({gen.map, fwd + 1});
      letters.push_back({gen.map.inverse(), fwd});
    }
  }
  return letters;
}

struct Node {
  InversiveMap word;
  std::int16_t last = -1;    // letter index, -1 for the identity
  std::int16_t streak = 0;   // consecutive all-over-bound extensions
};

struct Candidate {
  CanonicalKey key;
  GeneralizedCircle gc;
  std::int32_t parent;
  std::uint64_t slot;  // child_index * n_seeds + seed, for parent fixup
};

bool candidate_less(const Candidate& x, const Candidate& y) {
  if (x.key != y.key) return x.key < y.key;
  const auto rx = std::make_tuple(x.gc.a, x.gc.b.real(), x.gc.b.imag(), x.gc.c, x.parent, x.slot);
  const auto ry = std::make_tuple(y.gc.a, y.gc.b.real(), y.gc.b.imag(), y.gc.c, y.parent, y.slot);
  return rx < ry;
}

}  // namespace

Packing orbit_enumerate(const GroupPresentation& group, std::span<const GeneralizedCircle> seeds,
                        const OrbitOptions& opts) {
  if (opts.max_word_len < 0) throw std::invalid_argument("orbit_enumerate: max_word_len < 0");
  if (!(opts.curvature_bound > 0.0)) throw std::invalid_argument("orbit_enumerate: bound <= 0");
  group.validate();
  const double T = opts.curvature_bound;
  const std::size_t S = seeds.size();

  Packing p;
  p.curvature_bound = T;
  p.source = "orbit";
  DedupIndex dedup;
  std::atomic<std::uint64_t> suspects{0};

  // Identity level: seeds are retained unconditionally.
  std::vector<std::int32_t> frontier_circle;  // per (node, seed): packing index or -1
  frontier_circle.reserve(S);
  for (const auto& seed : seeds) {
    const GeneralizedCircle gc = seed.normalized();
    bool inserted = false;
    const auto at = dedup.insert(gc, static_cast<std::uint32_t>(p.size()), inserted);
    if (inserted) p.add(gc, 0, -1);
    frontier_circle.push_back(static_cast<std::int32_t>(at));
  }
  std::vector<Node> frontier{Node{}};

  const std::vector<Letter> letters = make_alphabet(group);
  if (letters.empty() || S == 0) return p;

  for (int level = 1; level <= opts.max_word_len; ++level) {
    // Pass A: expand every frontier node by every allowed letter; collect the
    // sub-bound images whose keys are absent from the (frozen) global index.
    const std::size_t n = frontier.size();
    const int workers = opts.workers > 0 ? opts.workers : worker_count();
    std::vector<std::vector<Node>> next_parts(workers);
    std::vector<std::vector<Candidate>> cand_parts(workers);
    std::vector<std::vector<std::int32_t>> pending_parts(workers);  // per child per seed
    std::atomic<int> part_seq{0};

    parallel_chunks(n, workers, [&](std::size_t lo, std::size_t hi) {
      const int me = part_seq.fetch_add(1);
      auto& nodes_out = next_parts[me];
      auto& cands_out = cand_parts[me];
      auto& pending = pending_parts[me];
      for (std::size_t ni = lo; ni < hi; ++ni) {
        const Node& node = frontier[ni];
        for (int li = 0; li < static_cast<int>(letters.size()); ++li) {
          if (node.last >= 0 && letters[node.last].inverse == li) continue;
          Node child;
          child.word = compose(node.word, letters[li].map);
          child.last = static_cast<std::int16_t>(li);
          bool any_below = false;
          const std::uint64_t child_index =
              (static_cast<std::uint64_t>(me) << 40) | nodes_out.size();
          for (std::size_t si = 0; si < S; ++si) {
            const GeneralizedCircle img = circle_transform(child.word, seeds[si]);
            const CircleGeometry geom = circle_geometry(img);
            const double curv = geom.curvature();
            if (geom.kind == CircleKind::line || curv < T) any_below = true;
            std::int32_t resolved = -1;
            std::uint32_t at = 0;
            if (dedup.find(img, at)) {
              resolved = static_cast<std::int32_t>(at);
              if (suspicious_match(img, p.entries[at].gc)) suspects.fetch_add(1);
            } else if (geom.kind == CircleKind::line || curv < T) {
              cands_out.push_back(
                  {canonical_key(img), img, frontier_circle[ni * S + si],
                   child_index * S + si});
              resolved = -2;  // filled after the merge
            }
            pending.push_back(resolved);
          }
          child.streak = any_below ? 0 : static_cast<std::int16_t>(node.streak + 1);
          if (opts.prune && child.streak > opts.patience) {
            // An over-bound child never produced candidates (any sub-bound or
            // line image resets the streak), so dropping it loses nothing.
            pending.resize(pending.size() - S);
            continue;
          }
          nodes_out.push_back(child);
        }
      }
    });

    // Merge: sort candidates (key, then value) and insert first-of-key.
    // The rule is independent of thread count and scheduling.
    std::vector<Candidate> cands;
    for (auto& part : cand_parts) {
      cands.insert(cands.end(), part.begin(), part.end());
      part.clear();
    }
    std::sort(cands.begin(), cands.end(), candidate_less);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (i > 0 && cands[i].key == cands[i - 1].key) continue;
      bool inserted = false;
      const auto at = dedup.insert(cands[i].gc, static_cast<std::uint32_t>(p.size()), inserted);
      if (inserted)
        p.add(cands[i].gc, level, cands[i].parent);
      else if (suspicious_match(cands[i].gc, p.entries[at].gc))
        suspects.fetch_add(1);
    }

    if (level == opts.max_word_len) break;

    // Pass B: resolve the per-(child, seed) packing indices now that the
    // level's insertions are final, and assemble the next frontier.
    std::vector<Node> next;
    std::vector<std::int32_t> next_circle;
    for (int part = 0; part < workers; ++part) {
      const auto& nodes_out = next_parts[part];
      const auto& pending = pending_parts[part];
      for (std::size_t ci = 0; ci < nodes_out.size(); ++ci) {
        next.push_back(nodes_out[ci]);
        for (std::size_t si = 0; si < S; ++si) {
          std::int32_t r = pending[ci * S + si];
          if (r == -2) {
            std::uint32_t at = 0;
            const GeneralizedCircle img = circle_transform(nodes_out[ci].word, seeds[si]);
            if (!dedup.find(img, at))
              throw std::logic_error("orbit_enumerate: candidate vanished during merge");
            r = static_cast<std::int32_t>(at);
          }
          next_circle.push_back(r);
        }
      }
    }
    frontier.swap(next);
    frontier_circle.swap(next_circle);
    if (frontier.empty()) break;
  }

  p.suspect_collisions = suspects.load();
  if (p.suspect_collisions > 0 && p.suspect_collisions * 100 > p.size()) {
    std::fprintf(stderr,
                 "orbit_enumerate: warning: %llu dedup matches beyond noise scale over %zu "
                 "circles; the dedup grid may be mis-tuned for this input\n",
                 static_cast<unsigned long long>(p.suspect_collisions), p.size());
  }
  return p;
}

}  // namespace circles
