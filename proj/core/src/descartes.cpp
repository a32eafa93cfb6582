#include "circles/descartes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "circles/tolerances.hpp"

namespace circles {

double DescartesQuadruple::curvature_residual() const {
  const double s = k[0] + k[1] + k[2] + k[3];
  const double q = k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + k[3] * k[3];
  return std::abs(s * s - 2.0 * q);
}

double DescartesQuadruple::center_residual() const {
  const Complex s = w[0] + w[1] + w[2] + w[3];
  const Complex q = w[0] * w[0] + w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  return std::abs(s * s - 2.0 * q);
}

bool DescartesQuadruple::satisfies_relations(double tolerance) const {
  return curvature_residual() <= tolerance && center_residual() <= tolerance;
}

GeneralizedCircle DescartesQuadruple::circle(int i) const {
  if (k[i] == 0.0)
    throw std::invalid_argument("DescartesQuadruple: line entries carry no offset; supply finite curvatures");
  const Complex center = w[i] / k[i];
  return GeneralizedCircle::from_center_radius(center, 1.0 / std::abs(k[i]), k[i] > 0.0);
}

DescartesQuadruple DescartesQuadruple::realize(const std::array<double, 4>& curvatures) {
  for (double kv : curvatures)
    if (kv == 0.0)
      throw std::invalid_argument("realize: zero curvature entries are not supported");
  {
    const double s = curvatures[0] + curvatures[1] + curvatures[2] + curvatures[3];
    const double q = curvatures[0] * curvatures[0] + curvatures[1] * curvatures[1] +
                     curvatures[2] * curvatures[2] + curvatures[3] * curvatures[3];
    if (std::abs(s * s - 2.0 * q) > tol::kDescartes * std::max(1.0, q))
      throw std::invalid_argument("realize: curvatures violate the Descartes relation, residual " +
                                  std::to_string(std::abs(s * s - 2.0 * q)));
  }
  const auto& kk = curvatures;
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i) r[i] = 1.0 / std::abs(kk[i]);
  // Tangency distance for circles with disjoint interiors: |1/k_i + 1/k_j|.
  auto gap = [&](int i, int j) { return std::abs(1.0 / kk[i] + 1.0 / kk[j]); };

  std::array<Complex, 4> c{};
  c[0] = Complex{0.0, 0.0};
  c[1] = Complex{-gap(0, 1), 0.0};
  // Intersect circles around c0 and c1.
  auto two_circle_meet = [](Complex p0, double d0, Complex p1, double d1) {
    const Complex diff = p1 - p0;
    const double d = std::abs(diff);
    const double x = (d * d + d0 * d0 - d1 * d1) / (2.0 * d);
    const double h2 = d0 * d0 - x * x;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const Complex u = diff / d;
    const Complex base = p0 + x * u;
    const Complex perp = Complex{-u.imag(), u.real()} * h;
    return std::array<Complex, 2>{base + perp, base - perp};
  };
  {
    const auto cands = two_circle_meet(c[0], gap(0, 2), c[1], gap(1, 2));
    c[2] = cands[0].imag() >= cands[1].imag() ? cands[0] : cands[1];
  }
  {
    const auto cands = two_circle_meet(c[0], gap(0, 3), c[1], gap(1, 3));
    // Both candidates are tangent to circles 0 and 1; prefer the one matching
    // the tangency to circle 2, tie-broken toward Im >= 0.
    const double e0 = std::abs(std::abs(cands[0] - c[2]) - gap(2, 3));
    const double e1 = std::abs(std::abs(cands[1] - c[2]) - gap(2, 3));
    if (std::abs(e0 - e1) <= tol::kNumeric)
      c[3] = cands[0].imag() >= cands[1].imag() ? cands[0] : cands[1];
    else
      c[3] = e0 < e1 ? cands[0] : cands[1];
  }
  DescartesQuadruple q;
  q.k = curvatures;
  for (int i = 0; i < 4; ++i) q.w[i] = kk[i] * c[i];
  if (!q.satisfies_relations(tol::kDescartes * 10.0))
    throw std::invalid_argument("realize: could not realize quadruple (center residual " +
                                std::to_string(q.center_residual()) + ")");
  return q;
}

DescartesQuadruple descartes_reflect(const DescartesQuadruple& q, int i) {
  if (i < 0 || i > 3) throw std::out_of_range("descartes_reflect: index");
  DescartesQuadruple out = q;
  double ks = 0.0;
  Complex ws{0.0, 0.0};
  for (int j = 0; j < 4; ++j) {
    if (j == i) continue;
    ks += q.k[j];
    ws += q.w[j];
  }
  out.k[i] = 2.0 * ks - q.k[i];
  out.w[i] = 2.0 * ws - q.w[i];
  return out;
}

Packing apollonian_enumerate(const DescartesQuadruple& root, double T) {
  if (!(T > 0.0) || !std::isfinite(T))
    throw std::invalid_argument("apollonian_enumerate: T must be positive and finite");
  const double scale = std::max({1.0, root.k[0] * root.k[0], root.k[1] * root.k[1],
                                 root.k[2] * root.k[2], root.k[3] * root.k[3]});
  if (root.curvature_residual() > tol::kDescartes * scale ||
      root.center_residual() > tol::kDescartes * scale)
    throw std::invalid_argument(
        "apollonian_enumerate: root violates the Descartes relation (curvature residual " +
        std::to_string(root.curvature_residual()) + ", center residual " +
        std::to_string(root.center_residual()) + ")");
  for (double kv : root.k)
    if (kv == 0.0)
      throw std::invalid_argument("apollonian_enumerate: root quadruples containing lines are not supported");

  Packing p;
  p.curvature_bound = T;
  p.source = "apollonian";
  DedupIndex dedup;

  struct Node {
    DescartesQuadruple q;
    std::array<std::int32_t, 4> idx;  // packing index of each current circle
    std::int32_t depth;
    std::int8_t banned;
  };

  p.max_curvature_residual = root.curvature_residual();
  p.max_center_residual = root.center_residual();

  Node start;
  start.q = root;
  start.depth = 0;
  start.banned = -1;
  for (int i = 0; i < 4; ++i) {
    bool inserted = false;
    const GeneralizedCircle gc = root.circle(i);
    const auto at = dedup.insert(gc, static_cast<std::uint32_t>(p.size()), inserted);
    if (inserted) p.add(gc, 0, -1);
    start.idx[i] = static_cast<std::int32_t>(at);
  }

  // DFS with an explicit stack. Non-backtracking reflections from a valid
  // quadruple only ever raise the new curvature, so cutting at |k'| >= T
  // visits exactly the sub-T tree; the stack stays O(tree depth).
  std::vector<Node> stack;
  stack.push_back(start);
  while (!stack.empty()) {
    const Node node = stack.back();
    stack.pop_back();
    for (int i = 0; i < 4; ++i) {
      if (i == node.banned) continue;
      const DescartesQuadruple child = descartes_reflect(node.q, i);
      p.max_curvature_residual = std::max(p.max_curvature_residual, child.curvature_residual());
      p.max_center_residual = std::max(p.max_center_residual, child.center_residual());
      const double curv = std::abs(child.k[i]);
      if (!(curv < T)) continue;
      bool inserted = false;
      const GeneralizedCircle gc = child.circle(i);
      const auto at = dedup.insert(gc, static_cast<std::uint32_t>(p.size()), inserted);
      if (inserted)
        p.add(gc, node.depth + 1, node.idx[i]);
      else if (suspicious_match(gc, p.entries[at].gc))
        ++p.suspect_collisions;
      Node next;
      next.q = child;
      next.idx = node.idx;
      next.idx[i] = static_cast<std::int32_t>(at);
      next.depth = node.depth + 1;
      next.banned = static_cast<std::int8_t>(i);
      stack.push_back(next);
    }
  }
  return p;
}

std::array<GeneralizedCircle, 4> dual_circles(const DescartesQuadruple& q) {
  std::array<CircleGeometry, 4> geo;
  for (int i = 0; i < 4; ++i) geo[i] = circle_geometry(q.circle(i));
  std::array<GeneralizedCircle, 4> duals;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> tri{};
    int n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != i) tri[n++] = j;
    const Complex t01 = tangency_point(geo[tri[0]], geo[tri[1]]);
    const Complex t02 = tangency_point(geo[tri[0]], geo[tri[2]]);
    const Complex t12 = tangency_point(geo[tri[1]], geo[tri[2]]);
    duals[i] = GeneralizedCircle::through_points(t01, t02, t12);
  }
  return duals;
}

}  // namespace circles
