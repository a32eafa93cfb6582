#include "circles/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "circles/tolerances.hpp"

namespace circles {

namespace {

// Orientation-canonical coefficient vector: flip so a > 0; for lines flip so
// the normal's first nonzero component is positive.
std::array<double, 4> canonical_coeffs(const GeneralizedCircle& gc) {
  std::array<double, 4> v{gc.a, gc.b.real(), gc.b.imag(), gc.c};
  double sign = 1.0;
  if (v[0] < -tol::kAlgebraic) {
    sign = -1.0;
  } else if (std::abs(v[0]) <= tol::kAlgebraic) {
    if (v[1] < -tol::kAlgebraic || (std::abs(v[1]) <= tol::kAlgebraic && v[2] < 0.0)) sign = -1.0;
  }
  for (double& x : v) x *= sign;
  return v;
}

}  // namespace

CanonicalKey canonical_key(const GeneralizedCircle& gc) {
  const auto v = canonical_coeffs(gc);
  CanonicalKey k;
  for (int i = 0; i < 4; ++i) k[i] = std::llround(v[i] / tol::kDedupGrid);
  return k;
}

void candidate_keys(const GeneralizedCircle& gc, std::vector<CanonicalKey>& out) {
  out.clear();
  const auto v = canonical_coeffs(gc);
  std::array<std::int64_t, 4> base;
  std::array<int, 4> extra{0, 0, 0, 0};  // 0 none, +1 or -1 neighbor
  for (int i = 0; i < 4; ++i) {
    const double scaled = v[i] / tol::kDedupGrid;
    base[i] = std::llround(scaled);
    const double frac = scaled - static_cast<double>(base[i]);
    if (frac > 0.49) extra[i] = 1;
    if (frac < -0.49) extra[i] = -1;
  }
  out.push_back(base);
  for (int i = 0; i < 4; ++i) {
    if (!extra[i]) continue;
    const std::size_t n = out.size();
    for (std::size_t j = 0; j < n; ++j) {
      CanonicalKey k = out[j];
      k[i] += extra[i];
      out.push_back(k);
    }
  }
}

void Packing::canonical_sort() {
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  auto rank = [this](std::size_t i) {
    const CircleGeometry& g = entries[i].geom;
    const bool line = g.kind == CircleKind::line;
    return std::make_tuple(g.signed_curvature, line ? g.normal.real() : g.center.real(),
                           line ? g.normal.imag() : g.center.imag(), line ? g.offset : 0.0,
                           entries[i].word_len);
  };
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return rank(i) < rank(j) || (rank(i) == rank(j) && i < j); });
  std::vector<std::int32_t> where(entries.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) where[order[pos]] = static_cast<std::int32_t>(pos);
  std::vector<PackedCircle> sorted;
  sorted.reserve(entries.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    PackedCircle e = entries[order[pos]];
    if (e.parent >= 0) e.parent = where[static_cast<std::size_t>(e.parent)];
    sorted.push_back(e);
  }
  entries.swap(sorted);
}

std::vector<CanonicalKey> Packing::sorted_keys() const {
  std::vector<CanonicalKey> keys;
  keys.reserve(entries.size());
  for (const auto& e : entries) keys.push_back(canonical_key(e.gc));
  std::sort(keys.begin(), keys.end());
  return keys;
}

bool set_equal(const Packing& p1, const Packing& p2) { return p1.sorted_keys() == p2.sorted_keys(); }

std::uint32_t DedupIndex::insert(const GeneralizedCircle& gc, std::uint32_t idx, bool& inserted) {
  std::uint32_t existing = 0;
  if (find(gc, existing)) {
    inserted = false;
    return existing;
  }
  map_.emplace(canonical_key(gc), idx);
  inserted = true;
  return idx;
}

bool DedupIndex::find(const GeneralizedCircle& gc, std::uint32_t& idx) const {
  candidate_keys(gc, scratch_);
  for (const auto& k : scratch_) {
    auto it = map_.find(k);
    if (it != map_.end()) {
      idx = it->second;
      return true;
    }
  }
  return false;
}

bool suspicious_match(const GeneralizedCircle& g1, const GeneralizedCircle& g2) {
  const auto c1 = canonical_coeffs(g1);
  const auto c2 = canonical_coeffs(g2);
  double diff = 0.0, mag = 1.0;
  for (int i = 0; i < 4; ++i) {
    diff = std::max(diff, std::abs(c1[i] - c2[i]));
    mag = std::max(mag, std::abs(c1[i]));
  }
  return diff > 1e-9 * mag;
}

Packing scale_packing(const Packing& p, double lambda, Complex shift) {
  if (!(lambda > 0.0)) throw std::invalid_argument("scale_packing: lambda must be positive");
  const MobiusMap g =
      compose(MobiusMap::translation(shift), MobiusMap::dilation(std::log(lambda)));
  Packing out;
  out.curvature_bound = p.curvature_bound / lambda;
  out.source = p.source;
  out.entries.reserve(p.entries.size());
  for (const auto& e : p.entries) {
    out.add(circle_transform(g, e.gc), e.word_len, e.parent);
  }
  return out;
}

}  // namespace circles
