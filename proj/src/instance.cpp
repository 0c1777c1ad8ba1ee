#include "cht/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cht {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  by_coordinate_.resize(points_.size());
  for (Index i = 0; i < points_.size(); ++i) by_coordinate_[i] = i;
  std::sort(by_coordinate_.begin(), by_coordinate_.end(),
            [this](Index a, Index b) { return points_[a] < points_[b]; });
  for (std::size_t i = 1; i < by_coordinate_.size(); ++i) {
    if (points_[by_coordinate_[i - 1]] == points_[by_coordinate_[i]]) {
      throw std::invalid_argument("duplicate point " + to_string(points_[by_coordinate_[i]]) +
                                  " at indices " + std::to_string(by_coordinate_[i - 1]) +
                                  " and " + std::to_string(by_coordinate_[i]));
    }
  }
}

std::optional<Index> PointSet::index_of(const Point& p) const {
  auto it = std::lower_bound(by_coordinate_.begin(), by_coordinate_.end(), p,
                             [this](Index i, const Point& q) { return points_[i] < q; });
  if (it != by_coordinate_.end() && points_[*it] == p) return *it;
  return std::nullopt;
}

bool HullSet::contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

HullSet canonicalize_hull(std::span<const Index> indices, const PointSet& points) {
  if (indices.empty()) throw std::invalid_argument("hull index set is empty");
  std::vector<Point> pts;
  pts.reserve(indices.size());
  for (Index i : indices) {
    if (i >= points.size()) {
      throw std::invalid_argument("hull index " + std::to_string(i) + " out of range (n=" +
                                  std::to_string(points.size()) + ")");
    }
    pts.push_back(points[i]);
  }
  const auto region = ConvexRegion::hull_of(std::move(pts));
  std::vector<Index> out;
  out.reserve(region.vertices().size());
  for (const auto& v : region.vertices()) out.push_back(*points.index_of(v));
  std::sort(out.begin(), out.end());
  return HullSet(std::move(out));
}

std::vector<Index> ccw_vertices(const HullSet& hull, const PointSet& points) {
  const auto region = hull_region(hull, points);
  std::vector<Index> out;
  out.reserve(region.vertices().size());
  for (const auto& v : region.vertices()) out.push_back(*points.index_of(v));
  return out;
}

ConvexRegion hull_region(const HullSet& hull, const PointSet& points) {
  std::vector<Point> pts;
  pts.reserve(hull.size());
  for (Index i : hull.indices()) pts.push_back(points[i]);
  return ConvexRegion::hull_of(std::move(pts));
}

std::vector<IndexTriple> check_general_position(const PointSet& points) {
  std::vector<IndexTriple> out;
  const std::size_t n = points.size();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k)
        if (orientation(points[i], points[j], points[k]) == 0) out.push_back({i, j, k});
  return out;
}

bool in_convex_position(const PointSet& points) {
  if (points.empty()) return true;
  return ConvexRegion::hull_of({points.points().begin(), points.points().end()})
             .vertices()
             .size() == points.size();
}

Instance Instance::build(PointSet points, const std::vector<std::vector<Index>>& hulls,
                         VariantFlags flags) {
  Instance inst;
  inst.family.reserve(hulls.size());
  for (const auto& h : hulls) inst.family.push_back(canonicalize_hull(h, points));
  inst.points = std::move(points);
  inst.flags = flags.normalized();
  return inst;
}

Instance Instance::sorted() const {
  Instance out = *this;
  std::sort(out.family.begin(), out.family.end());
  return out;
}

}  // namespace cht
