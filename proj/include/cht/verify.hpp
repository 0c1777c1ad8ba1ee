// Verifier for the three convex hull thrackle conditions.
#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cht/geometry.hpp"
#include "cht/instance.hpp"

namespace cht {

/// Regions of every hull of an instance and of every pair of hulls.
/// Computed once at construction; read-only afterwards.
class FamilyGeometry {
 public:
  explicit FamilyGeometry(const Instance& inst);

  std::size_t size() const { return hulls_.size(); }
  const ConvexRegion& hull(Index i) const { return hulls_[i]; }
  /// C_i intersect C_j; C_i itself when i == j.
  const ConvexRegion& pair(Index i, Index j) const;

 private:
  std::vector<ConvexRegion> hulls_;
  std::vector<ConvexRegion> pairs_;  // i < j, packed row-major upper triangle
};

enum class PairIssue {
  containment,  // one hull is a subset of the other
  duplicate,    // equal hulls in a non-multiset family
};

struct PairViolation {
  Index first;
  Index second;
  PairIssue issue;
  friend bool operator==(const PairViolation&, const PairViolation&) = default;
};

struct TripleViolation {
  IndexTriple hulls;
  ConvexRegion region;
  friend bool operator==(const TripleViolation&, const TripleViolation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<PairViolation> condition1_violations;
  std::vector<std::pair<Index, Index>> condition2_violations;
  std::vector<TripleViolation> condition3_violations;
  std::vector<IndexTriple> general_position_violations;
};

/// Checks conditions 1-3 and general position under inst.flags. Every list is
/// sorted by index tuple. Throws std::invalid_argument if a hull refers to a
/// point that does not exist.
VerificationReport verify(const Instance& inst);

/// Checks only that every hull index is in range.
void validate_structure(const Instance& inst);

/// Exact region C_i intersect C_j. Throws std::out_of_range on bad indices.
ConvexRegion pairwise_intersection_class(const Instance& inst, Index i, Index j);

/// Condition 3 on a single triple region: empty, or one point of P.
bool triple_region_allowed(const ConvexRegion& region, const PointSet& points);

}  // namespace cht
