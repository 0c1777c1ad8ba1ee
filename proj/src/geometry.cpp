#include "cht/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cht {

std::string to_string(const Point& p) {
  return "(" + p.x.get_str() + "," + p.y.get_str() + ")";
}

std::string to_string(const ConvexRegion& r) {
  if (r.empty()) return "empty";
  std::string out;
  for (const auto& v : r.vertices()) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

Rational cross(const Point& a, const Point& b, const Point& c) {
  Rational out = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return out;
}

int orientation(const Point& a, const Point& b, const Point& c) {
  return sgn(cross(a, b, c));
}

Rational dot(const Point& p, const Point& a, const Point& b) {
  Rational out = (a.x - p.x) * (b.x - p.x) + (a.y - p.y) * (b.y - p.y);
  return out;
}

ConvexRegion ConvexRegion::hull_of(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return ConvexRegion(std::move(pts));

  // Andrew's monotone chain; collinear points are popped so only extreme
  // points survive. The lower chain starts at the lexicographic minimum.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ConvexRegion(std::move(hull));
}

ConvexRegion convex_hull_extremes(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  if (std::adjacent_find(pts.begin(), pts.end()) != pts.end()) {
    throw std::invalid_argument("duplicate point in hull input");
  }
  return ConvexRegion::hull_of(std::move(pts));
}

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  const auto& [lo, hi] = std::minmax(a, b);
  return !(p < lo) && !(hi < p);
}

Point lerp(const Point& u, const Point& v, const Rational& t) {
  Rational x = u.x + t * (v.x - u.x);
  Rational y = u.y + t * (v.y - u.y);
  return {std::move(x), std::move(y)};
}

// Where segment uv meets the line through e0 e1, given the signed crosses of
// u and v against that line (which must have opposite signs).
Point crossing(const Point& u, const Point& v, const Rational& cu, const Rational& cv) {
  Rational t = cu / (cu - cv);
  return lerp(u, v, t);
}

ConvexRegion intersect_segments(const Point& a0, const Point& a1, const Point& b0,
                                const Point& b1) {
  const int o1 = orientation(a0, a1, b0);
  const int o2 = orientation(a0, a1, b1);
  if (o1 == 0 && o2 == 0) {
    // Same supporting line: lexicographic order is monotone along it.
    const auto& [alo, ahi] = std::minmax(a0, a1);
    const auto& [blo, bhi] = std::minmax(b0, b1);
    const Point& lo = std::max(alo, blo);
    const Point& hi = std::min(ahi, bhi);
    if (hi < lo) return {};
    return ConvexRegion::hull_of({lo, hi});
  }
  const int o3 = orientation(b0, b1, a0);
  const int o4 = orientation(b0, b1, a1);
  if (o1 * o2 > 0 || o3 * o4 > 0) return {};
  if (o1 == 0) return ConvexRegion::hull_of({b0});
  if (o2 == 0) return ConvexRegion::hull_of({b1});
  if (o3 == 0) return ConvexRegion::hull_of({a0});
  if (o4 == 0) return ConvexRegion::hull_of({a1});
  return ConvexRegion::hull_of({crossing(a0, a1, cross(b0, b1, a0), cross(b0, b1, a1))});
}

// Parametric clip of segment uv against a two-dimensional ccw polygon.
ConvexRegion clip_segment(const Point& u, const Point& v, const std::vector<Point>& poly) {
  Rational lo = 0;
  Rational hi = 1;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& e0 = poly[i];
    const Point& e1 = poly[(i + 1) % poly.size()];
    Rational cu = cross(e0, e1, u);
    Rational cv = cross(e0, e1, v);
    if (sgn(cu) < 0 && sgn(cv) < 0) return {};
    if (sgn(cu) >= 0 && sgn(cv) >= 0) continue;
    Rational t = cu / (cu - cv);
    if (sgn(cu) < 0) {
      if (t > lo) lo = t;
    } else if (t < hi) {
      hi = t;
    }
    if (lo > hi) return {};
  }
  return ConvexRegion::hull_of({lerp(u, v, lo), lerp(u, v, hi)});
}

// Sutherland-Hodgman against every edge of a two-dimensional ccw polygon.
// Degenerate intermediate results (segments, points) pass through unchanged
// because the loop only needs a closed vertex cycle.
ConvexRegion clip_polygon(std::vector<Point> subject, const std::vector<Point>& clip) {
  for (std::size_t i = 0; i < clip.size() && !subject.empty(); ++i) {
    const Point& e0 = clip[i];
    const Point& e1 = clip[(i + 1) % clip.size()];
    std::vector<Point> out;
    out.reserve(subject.size() + 1);
    const std::size_t k = subject.size();
    std::vector<Rational> side(k);
    for (std::size_t j = 0; j < k; ++j) side[j] = cross(e0, e1, subject[j]);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t nj = (j + 1) % k;
      const int sc = sgn(side[j]);
      const int sn = sgn(side[nj]);
      if (sc >= 0) out.push_back(subject[j]);
      if (sc * sn < 0) out.push_back(crossing(subject[j], subject[nj], side[j], side[nj]));
    }
    subject = std::move(out);
  }
  return ConvexRegion::hull_of(std::move(subject));
}

}  // namespace

Location point_in_region(const Point& p, const ConvexRegion& region) {
  const auto& v = region.vertices();
  switch (region.dimension()) {
    case -1:
      throw std::invalid_argument("point location in an empty region");
    case 0:
      return p == v[0] ? Location::boundary : Location::outside;
    case 1:
      return on_segment(p, v[0], v[1]) ? Location::boundary : Location::outside;
    default:
      break;
  }
  bool touches = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int o = orientation(v[i], v[(i + 1) % v.size()], p);
    if (o < 0) return Location::outside;
    if (o == 0) touches = true;
  }
  return touches ? Location::boundary : Location::interior;
}

ConvexRegion intersect_regions(const ConvexRegion& a, const ConvexRegion& b) {
  if (a.empty() || b.empty()) return {};
  // Let `big` have the larger dimension.
  const bool swap = a.dimension() < b.dimension();
  const ConvexRegion& big = swap ? b : a;
  const ConvexRegion& small = swap ? a : b;
  const auto& sv = small.vertices();
  switch (small.dimension()) {
    case 0:
      return point_in_region(sv[0], big) == Location::outside ? ConvexRegion{} : small;
    case 1:
      if (big.dimension() == 1) {
        return intersect_segments(big.vertices()[0], big.vertices()[1], sv[0], sv[1]);
      }
      return clip_segment(sv[0], sv[1], big.vertices());
    default:
      return clip_polygon(big.vertices(), sv);
  }
}

bool same_ray(const Point& p, const Point& a, const Point& b) {
  return orientation(p, a, b) == 0 && sgn(dot(p, a, b)) > 0;
}

bool left_of_vector(const Point& p, const Point& a, const Point& b) {
  if (a == p || b == p) throw std::invalid_argument("left_of_vector: degenerate vector");
  const int o = orientation(p, a, b);
  if (o != 0) return o > 0;
  return sgn(dot(p, a, b)) < 0;
}

}  // namespace cht
