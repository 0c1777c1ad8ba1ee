#include "cht/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

namespace cht {

namespace {

constexpr std::array<const char*, 10> kPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Frame {
  double min_x = 0, min_y = 0, scale = 1, off_x = 0, off_y = 0, height = 0;

  double x(const Point& p) const { return off_x + (p.x.get_d() - min_x) * scale; }
  // SVG's y axis points down.
  double y(const Point& p) const { return height - (off_y + (p.y.get_d() - min_y) * scale); }
};

Frame fit(const PointSet& points, const SvgOptions& o) {
  Frame f;
  f.height = o.height;
  if (points.empty()) return f;
  double max_x = points[0].x.get_d(), max_y = points[0].y.get_d();
  f.min_x = max_x;
  f.min_y = max_y;
  for (const auto& p : points.points()) {
    f.min_x = std::min(f.min_x, p.x.get_d());
    f.min_y = std::min(f.min_y, p.y.get_d());
    max_x = std::max(max_x, p.x.get_d());
    max_y = std::max(max_y, p.y.get_d());
  }
  const double w = o.width - 2 * o.margin;
  const double h = o.height - 2 * o.margin;
  const double span_x = max_x - f.min_x;
  const double span_y = max_y - f.min_y;
  if (span_x <= 0 && span_y <= 0) {
    f.scale = 1;
  } else if (span_x <= 0) {
    f.scale = h / span_y;
  } else if (span_y <= 0) {
    f.scale = w / span_x;
  } else {
    f.scale = std::min(w / span_x, h / span_y);
  }
  f.off_x = o.margin + (w - span_x * f.scale) / 2;
  f.off_y = o.margin + (h - span_y * f.scale) / 2;
  return f;
}

}  // namespace

std::string render_svg(const Instance& inst, const SvgOptions& o) {
  const Frame f = fit(inst.points, o);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" "
         "\"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(o.width)
      << "\" height=\"" << num(o.height) << "\" viewBox=\"0 0 " << num(o.width) << ' ' << num(o.height)
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(o.width) << "\" height=\"" << num(o.height)
      << "\" fill=\"white\"/>\n";

  out << "<g id=\"hulls\">\n";
  for (Index h = 0; h < inst.family.size(); ++h) {
    const char* color = kPalette[h % kPalette.size()];
    const auto ring = ccw_vertices(inst.family[h], inst.points);
    if (ring.size() == 1) continue;  // drawn by its dot
    if (ring.size() == 2) {
      const Point& a = inst.points[ring[0]];
      const Point& b = inst.points[ring[1]];
      out << "<line class=\"hull\" x1=\"" << num(f.x(a)) << "\" y1=\"" << num(f.y(a)) << "\" x2=\""
          << num(f.x(b)) << "\" y2=\"" << num(f.y(b)) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\" stroke-opacity=\"0.8\"/>\n";
      continue;
    }
    out << "<polygon class=\"hull\" points=\"";
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& p = inst.points[ring[i]];
      out << (i ? " " : "") << num(f.x(p)) << ',' << num(f.y(p));
    }
    out << "\" fill=\"" << color << "\" fill-opacity=\"" << num(o.fill_opacity) << "\" stroke=\"" << color
        << "\" stroke-width=\"1\"/>\n";
  }
  out << "</g>\n<g id=\"points\">\n";
  for (Index i = 0; i < inst.points.size(); ++i) {
    const Point& p = inst.points[i];
    out << "<circle cx=\"" << num(f.x(p)) << "\" cy=\"" << num(f.y(p)) << "\" r=\"" << num(o.point_radius)
        << "\" fill=\"black\"/>\n";
    if (o.labels) {
      out << "<text x=\"" << num(f.x(p) + o.point_radius + 2) << "\" y=\"" << num(f.y(p) - o.point_radius - 2)
          << "\" font-family=\"sans-serif\" font-size=\"12\">" << i << "</text>\n";
    }
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace cht
