// Point sets, canonical hull index sets and thrackle instances.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cht/geometry.hpp"

namespace cht {

using Index = std::size_t;
using IndexTriple = std::array<Index, 3>;

/// Ordered list of pairwise distinct points; a point's position is its index.
class PointSet {
 public:
  PointSet() = default;
  /// Throws std::invalid_argument if two points coincide.
  explicit PointSet(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](Index i) const { return points_[i]; }
  std::span<const Point> points() const { return points_; }

  /// Index of the point equal to p, if any.
  std::optional<Index> index_of(const Point& p) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<Point> points_;
  std::vector<Index> by_coordinate_;  // indices sorted by point
};

/// Sorted indices of the extreme points of Conv(S). Only canonicalize_hull
/// produces these, so every HullSet is already in canonical form.
class HullSet {
 public:
  HullSet() = default;

  const std::vector<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool contains(Index i) const;

  friend bool operator==(const HullSet&, const HullSet&) = default;
  friend auto operator<=>(const HullSet&, const HullSet&) = default;

 private:
  friend HullSet canonicalize_hull(std::span<const Index>, const PointSet&);
  explicit HullSet(std::vector<Index> idx) : indices_(std::move(idx)) {}
  std::vector<Index> indices_;
};

/// Reduces S to the extreme points of its hull. Repeated indices are merged.
/// Throws std::invalid_argument for an empty S or an out-of-range index.
HullSet canonicalize_hull(std::span<const Index> indices, const PointSet& points);

/// Hull vertices in counterclockwise order, starting from the
/// lexicographically smallest point.
std::vector<Index> ccw_vertices(const HullSet& hull, const PointSet& points);

ConvexRegion hull_region(const HullSet& hull, const PointSet& points);

/// All index triples i<j<k whose points are collinear.
std::vector<IndexTriple> check_general_position(const PointSet& points);

/// True iff every point is an extreme point of Conv(P).
bool in_convex_position(const PointSet& points);

/// Relaxations of the three thrackle conditions.
struct VariantFlags {
  bool allow_containment = false;
  bool allow_triple_interior = false;
  bool allow_multiset = false;  // implies allow_containment
  bool allow_collinear = false;

  bool containment_allowed() const { return allow_containment || allow_multiset; }

  /// Copy with the multiset => containment implication applied.
  VariantFlags normalized() const {
    VariantFlags f = *this;
    if (f.allow_multiset) f.allow_containment = true;
    return f;
  }

  bool is_default() const {
    return !allow_containment && !allow_triple_interior && !allow_multiset && !allow_collinear;
  }

  friend bool operator==(const VariantFlags&, const VariantFlags&) = default;
};

struct Instance {
  PointSet points;
  std::vector<HullSet> family;
  VariantFlags flags;

  std::size_t n() const { return points.size(); }
  std::size_t m() const { return family.size(); }

  /// Canonicalizes every index list; flags are normalized.
  static Instance build(PointSet points, const std::vector<std::vector<Index>>& hulls,
                        VariantFlags flags = {});

  /// Same instance with the family sorted lexicographically.
  Instance sorted() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

}  // namespace cht
