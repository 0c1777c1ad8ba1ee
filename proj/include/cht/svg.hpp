#pragma once

#include <string>

#include "cht/instance.hpp"

namespace cht {

struct SvgOptions {
  double width = 640;
  double height = 640;
  double margin = 40;
  double point_radius = 4;
  double fill_opacity = 0.22;
  bool labels = true;
};

/// SVG 1.1 drawing: one translucent polygon (or line, for segments) per hull
/// and one labelled dot per point. Output depends only on the input.
std::string render_svg(const Instance& inst, const SvgOptions& options = {});

}  // namespace cht
