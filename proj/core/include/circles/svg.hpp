#pragma once

#include <string>

#include "circles/packing.hpp"

namespace circles {

struct RenderStyle {
  double stroke_width_frac = 0.0015;  // relative to the window diagonal
  std::string stroke = "#1b2a4a";
  std::string fill = "none";
  int size_px = 800;

  static RenderStyle preset(const std::string& name);  // "outline" | "filled"
};

// One <circle> element per circle and one <line> per line (clipped to the
// window), viewBox = bounding window of the packing. Element count always
// equals the packing's row count.
std::string render_svg(const Packing& p, const RenderStyle& style = {});

}  // namespace circles
