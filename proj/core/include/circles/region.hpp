#pragma once

#include <memory>
#include <vector>

#include "circles/circle.hpp"

namespace circles {

// Borel test region: rectangle | disk | halfplane and boolean combinations.
// The point indicator is exact everywhere. The circle-curve predicates
// (meets / contains the curve) are exact on the primitives and evaluate
// structurally on the combinators: meets distributes exactly over union,
// containment over intersection; the two remaining cases are the usual
// conservative structural approximations.
class Region {
 public:
  static Region rectangle(Complex lo, Complex hi);
  static Region disk(Complex center, double radius);
  // { z : Re(conj(n) z) <= offset }, n normalized internally.
  static Region halfplane(Complex normal, double offset);
  static Region union_of(std::vector<Region> parts);
  static Region intersection_of(std::vector<Region> parts);
  static Region complement(Region inner);

  bool contains(Complex z) const;
  // Does the circle curve (or line) intersect the region?
  bool meets(const CircleGeometry& g) const;
  // Is the whole curve inside the region?
  bool contains_curve(const CircleGeometry& g) const;

  // Image under z -> lambda z + shift (lambda > 0).
  Region transformed(double lambda, Complex shift = Complex{0.0, 0.0}) const;
  bool bounded() const;

  struct Node;
  const Node& node() const { return *node_; }

 private:
  explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Region::Node {
  enum class Kind { rect, disk, halfplane, unite, intersect, complement } kind;
  // rect: lo/hi corners. disk: center/radius. halfplane: normal/offset.
  Complex a{0.0, 0.0};
  Complex b{0.0, 0.0};
  double x = 0.0;
  std::vector<Region> parts;
};

}  // namespace circles
