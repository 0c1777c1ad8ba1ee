// Exact planar geometry over rational coordinates.
//
// Every predicate in this header is exact: coordinates are GMP rationals and
// no floating point value ever takes part in a decision.
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cht {

/// Arbitrary precision rational, always kept in lowest terms by GMP.
using Rational = mpq_class;

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic on (x, y).
  friend bool operator<(const Point& a, const Point& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
};

std::string to_string(const Point& p);

/// Twice the signed area of triangle abc, i.e. (b-a) x (c-a).
Rational cross(const Point& a, const Point& b, const Point& c);

/// Sign of cross(a, b, c): +1 counterclockwise, 0 collinear, -1 clockwise.
int orientation(const Point& a, const Point& b, const Point& c);

/// (a-p) . (b-p)
Rational dot(const Point& p, const Point& a, const Point& b);

/// A closed convex subset of the plane spanned by finitely many points.
///
/// Stored canonically: vertices are the extreme points in counterclockwise
/// order starting from the lexicographically smallest one, so two regions
/// describe the same set iff their vertex lists compare equal.
class ConvexRegion {
 public:
  ConvexRegion() = default;

  /// Convex hull of arbitrary points; duplicates and non-extreme points are
  /// dropped.
  static ConvexRegion hull_of(std::vector<Point> points);

  const std::vector<Point>& vertices() const { return vertices_; }
  bool empty() const { return vertices_.empty(); }

  /// -1 empty, 0 point, 1 segment, 2 positive area.
  int dimension() const {
    return vertices_.size() >= 3 ? 2 : static_cast<int>(vertices_.size()) - 1;
  }

  friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;

 private:
  explicit ConvexRegion(std::vector<Point> v) : vertices_(std::move(v)) {}
  std::vector<Point> vertices_;
};

std::string to_string(const ConvexRegion& r);

/// Hull of a non-empty set of pairwise distinct points. Throws
/// std::invalid_argument on empty input or duplicates.
ConvexRegion convex_hull_extremes(std::span<const Point> points);

enum class Location { outside, boundary, interior };

/// Exact location of p relative to a non-empty region. Only two-dimensional
/// regions have an interior; the relative interior of a segment counts as
/// boundary.
Location point_in_region(const Point& p, const ConvexRegion& region);

/// Exact intersection of two convex regions (either may be empty).
ConvexRegion intersect_regions(const ConvexRegion& a, const ConvexRegion& b);

inline int region_dimension(const ConvexRegion& r) { return r.dimension(); }

/// True iff the counterclockwise angle from p->a to p->b lies in (0, 180]
/// degrees. Throws std::invalid_argument if a or b coincides with p.
bool left_of_vector(const Point& p, const Point& a, const Point& b);

/// True iff b lies on the open ray from p through a.
bool same_ray(const Point& p, const Point& a, const Point& b);

}  // namespace cht
