#include "circles/orbit_points.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "circles/errors.hpp"
#include "circles/threads.hpp"

namespace circles {

namespace {

struct Letter {
  InversiveMap map;
  int inverse = 0;
};

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

struct RawAtom {
  Complex z;
  double r;
  std::int32_t word_len;
};

// Quantized identity of an orbit point; r is keyed logarithmically so deep
// atoms keep relative resolution.
std::array<std::int64_t, 3> atom_key(const RawAtom& a) {
  return {std::llround(a.z.real() * 1e10), std::llround(a.z.imag() * 1e10),
          std::llround(std::log(a.r) * 1e9)};
}

void dfs_emit(const InversiveMap& word, int last, int depth, int max_depth,
              const std::vector<Letter>& letters, std::vector<RawAtom>& out) {
  struct Frame {
    InversiveMap word;
    int last;
    int depth;
  };
  std::vector<Frame> stack{{word, last, depth}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    const UHPoint pt = apply_h3(f.word, UHPoint::base_j());
    out.push_back({pt.z, pt.r, f.depth});
    if (f.depth >= max_depth) continue;
    for (int li = 0; li < static_cast<int>(letters.size()); ++li) {
      if (f.last >= 0 && letters[f.last].inverse == li) continue;
      stack.push_back({compose(f.word, letters[li].map), li, f.depth + 1});
    }
  }
}

}  // namespace

OrbitPointSet orbit_points(const GroupPresentation& group, int max_word_len, int workers) {
  if (max_word_len < 0) throw std::invalid_argument("orbit_points: max_word_len < 0");
  group.validate();
  const std::vector<Letter> letters = make_alphabet(group);

  // Seed the parallel DFS with the word tree up to depth 2; each subtree
  // walks independently and the sorted merge below is order-insensitive.
  struct Seed {
    InversiveMap word;
    int last;
  };
  std::vector<RawAtom> raw;
  std::vector<Seed> seeds;
  {
    const UHPoint j = UHPoint::base_j();
    raw.push_back({j.z, j.r, 0});
    std::vector<Seed> level{{InversiveMap::identity(), -1}};
    for (int depth = 1; depth <= std::min(max_word_len, 2); ++depth) {
      std::vector<Seed> next;
      for (const Seed& s : level) {
        for (int li = 0; li < static_cast<int>(letters.size()); ++li) {
          if (s.last >= 0 && letters[s.last].inverse == li) continue;
          Seed child{compose(s.word, letters[li].map), li};
          const UHPoint pt = apply_h3(child.word, UHPoint::base_j());
          raw.push_back({pt.z, pt.r, depth});
          next.push_back(child);
        }
      }
      level.swap(next);
    }
    if (max_word_len > 2) seeds.swap(level);
  }

  if (!seeds.empty()) {
    const int w = workers > 0 ? workers : worker_count();
    std::vector<std::vector<RawAtom>> parts(seeds.size());
    parallel_chunks(seeds.size(), w, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        for (int li = 0; li < static_cast<int>(letters.size()); ++li) {
          if (letters[seeds[i].last].inverse == li) continue;
          dfs_emit(compose(seeds[i].word, letters[li].map), li, 3, max_word_len, letters,
                   parts[i]);
        }
      }
    });
    for (auto& part : parts) {
      raw.insert(raw.end(), part.begin(), part.end());
      part.clear();
      part.shrink_to_fit();
    }
  }

  // Dedup by sorted quantized key, keeping the smallest word length.
  std::sort(raw.begin(), raw.end(), [](const RawAtom& a, const RawAtom& b) {
    const auto ka = atom_key(a), kb = atom_key(b);
    return ka != kb ? ka < kb : a.word_len < b.word_len;
  });
  OrbitPointSet out;
  out.atoms.reserve(raw.size() / 2 + 1);
  const UHPoint j = UHPoint::base_j();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i > 0 && atom_key(raw[i]) == atom_key(raw[i - 1])) continue;
    OrbitAtom a;
    a.z = raw[i].z;
    a.r = raw[i].r;
    a.word_len = raw[i].word_len;
    a.dist = hyp_dist(j, {a.z, a.r});
    out.atoms.push_back(a);
  }
  return out;
}

double poincare_sum(const OrbitPointSet& orbit, double s, const UHPoint& x) {
  if (!(s > 0.0)) throw std::invalid_argument("poincare_sum: s must be positive");
  const bool at_j = std::abs(x.z) == 0.0 && x.r == 1.0;
  double sum = 0.0;
  for (const auto& a : orbit.atoms) {
    const double d = at_j ? a.dist : hyp_dist(x, a.point());
    sum += std::exp(-s * d);
  }
  return sum;
}

ExponentEstimate critical_exponent_orbit(const OrbitPointSet& orbit) {
  const std::size_t n = orbit.atoms.size();
  if (n < 100) throw InsufficientDataError("critical_exponent_orbit: fewer than 100 atoms");
  std::vector<double> dist;
  dist.reserve(n);
  std::int32_t max_level = 0;
  for (const auto& a : orbit.atoms) {
    dist.push_back(a.dist);
    max_level = std::max(max_level, a.word_len);
  }
  std::sort(dist.begin(), dist.end());
  const double span = dist.back() - dist.front();
  if (span < 3.0)
    throw InsufficientDataError("critical_exponent_orbit: atoms span under 3 units");

  // Trust radius: the depth-L ball is complete only below the smallest
  // displacement among exactly-depth-L atoms.
  double r_hi = dist.back();
  if (max_level > 0) {
    double min_deep = dist.back();
    for (const auto& a : orbit.atoms)
      if (a.word_len == max_level) min_deep = std::min(min_deep, a.dist);
    r_hi = std::max(std::min(min_deep, dist.back()), 3.0);
  }
  const double r_lo = 0.3;
  if (r_hi <= r_lo + 1.0)
    throw InsufficientDataError("critical_exponent_orbit: trusted range too small");

  // Samples of (R, log N(R)) on a uniform grid over the trusted range.
  const int kSamples = 96;
  std::vector<double> xs(kSamples), ys(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    const double r = r_lo + (r_hi - r_lo) * (i + 1) / static_cast<double>(kSamples);
    const auto cnt = std::upper_bound(dist.begin(), dist.end(), r) - dist.begin();
    xs[i] = r;
    ys[i] = std::log(static_cast<double>(std::max<std::ptrdiff_t>(cnt, 1)));
  }

  // Largest linear regime: among candidate windows whose OLS residual is
  // near-minimal, take the longest (rightmost on ties).
  const int kBreaks = 17;
  const double min_len = std::max(2.0, 0.3 * (r_hi - r_lo));
  struct Window {
    double lo, hi, slope, rms;
    int count;
  };
  std::vector<Window> windows;
  for (int i = 0; i < kBreaks; ++i) {
    for (int j = i + 1; j < kBreaks; ++j) {
      const double lo = r_lo + (r_hi - r_lo) * i / (kBreaks - 1.0);
      const double hi = r_lo + (r_hi - r_lo) * j / (kBreaks - 1.0);
      if (hi - lo < min_len) continue;
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      int m = 0;
      for (int k = 0; k < kSamples; ++k) {
        if (xs[k] < lo || xs[k] > hi) continue;
        sx += xs[k];
        sy += ys[k];
        sxx += xs[k] * xs[k];
        sxy += xs[k] * ys[k];
        ++m;
      }
      if (m < 8) continue;
      const double det = m * sxx - sx * sx;
      if (!(det > 0.0)) continue;
      const double slope = (m * sxy - sx * sy) / det;
      const double icept = (sy - slope * sx) / m;
      double rss = 0.0;
      for (int k = 0; k < kSamples; ++k) {
        if (xs[k] < lo || xs[k] > hi) continue;
        const double res = ys[k] - icept - slope * xs[k];
        rss += res * res;
      }
      windows.push_back({lo, hi, slope, std::sqrt(rss / m), m});
    }
  }
  if (windows.empty()) throw InsufficientDataError("critical_exponent_orbit: no usable window");
  double best_rms = windows.front().rms;
  for (const auto& w : windows) best_rms = std::min(best_rms, w.rms);
  const double cutoff = std::max(1.5 * best_rms, 0.02);
  const Window* chosen = nullptr;
  for (const auto& w : windows) {
    if (w.rms > cutoff) continue;
    if (!chosen || (w.hi - w.lo) > (chosen->hi - chosen->lo) ||
        ((w.hi - w.lo) == (chosen->hi - chosen->lo) && w.hi > chosen->hi))
      chosen = &w;
  }

  ExponentEstimate est;
  est.method = ExponentEstimate::Method::orbit_growth;
  est.delta = chosen->slope;
  est.window_lo = chosen->lo;
  est.window_hi = chosen->hi;
  {
    // Residuals of the chosen window, for diagnostics.
    double sx = 0, sy = 0;
    int m = 0;
    for (int k = 0; k < kSamples; ++k) {
      if (xs[k] < chosen->lo || xs[k] > chosen->hi) continue;
      sx += xs[k];
      sy += ys[k];
      ++m;
    }
    const double icept = (sy - chosen->slope * sx) / m;
    for (int k = 0; k < kSamples; ++k) {
      if (xs[k] < chosen->lo || xs[k] > chosen->hi) continue;
      est.residuals.push_back(ys[k] - icept - chosen->slope * xs[k]);
    }
  }
  return est;
}

}  // namespace circles
