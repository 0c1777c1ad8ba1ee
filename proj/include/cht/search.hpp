// Exhaustive branch and bound for the largest convex hull thrackle on a
// fixed point set.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cht/geometry.hpp"
#include "cht/instance.hpp"

namespace cht {

struct PoolLimits {
  std::size_t general_position = 9;
  std::size_t convex_position = 12;
  /// Replaces both limits when set.
  std::optional<std::size_t> override_points;
};

/// Every canonical hull with at least two points (plus the singletons when
/// containment is allowed), in lexicographic order,
/// with pairwise conditions 1 and 2 and pair regions precomputed. Triple
/// checks are memoized on demand, so a pool is not safe to share between
/// threads while searching.
class CandidatePool {
 public:
  CandidatePool(PointSet points, VariantFlags flags, std::vector<HullSet> hulls);

  const PointSet& points() const { return points_; }
  const VariantFlags& flags() const { return flags_; }
  std::size_t size() const { return hulls_.size(); }
  const HullSet& hull(Index i) const { return hulls_[i]; }
  const ConvexRegion& region(Index i) const { return regions_[i]; }

  /// Conditions 1 and 2 for two distinct pool entries.
  bool compatible(Index i, Index j) const { return compat_[i * size() + j] != 0; }
  /// C_i intersect C_j, meaningful for compatible pairs.
  const ConvexRegion& pair_region(Index i, Index j) const { return pair_regions_[i * size() + j]; }
  /// Condition 3 for three pairwise compatible entries (or trivially true
  /// when non-point triple intersections are allowed).
  bool triple_ok(Index i, Index j, Index k) const;

  /// Entries whose hull contains point p, keeping order.
  CandidatePool restricted_to_point(Index p) const;

 private:
  enum class PairKind : std::uint8_t { none, vertex_of_p, other };

  PointSet points_;
  VariantFlags flags_;
  std::vector<HullSet> hulls_;
  std::vector<ConvexRegion> regions_;
  std::vector<std::uint8_t> compat_;
  std::vector<ConvexRegion> pair_regions_;
  std::vector<PairKind> pair_kind_;
  mutable std::vector<std::uint8_t> triple_cache_;  // 0 unknown, 1 ok, 2 bad
  bool use_triple_cache_ = false;
};

/// Throws std::invalid_argument when the point set is larger than the limit
/// for its position type, or when it has collinear triples and collinear
/// points are not allowed. With allow_multiset every hull of two or more
/// points appears twice (a third copy would always break condition 3);
/// singletons stay single, since copies of {p} never conflict.
CandidatePool enumerate_candidates(const PointSet& points, const VariantFlags& flags,
                                   const PoolLimits& limits = {});

struct SearchResult {
  std::size_t max_size = 0;
  std::vector<HullSet> witness;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = true;
};

struct SearchOptions {
  /// Stop after this many nodes; the result is then marked non-exhaustive.
  std::optional<std::uint64_t> node_budget;
};

/// Largest family on the pool. A lone singleton hull is always a family of
/// size one, so max_size is at least 1 for a non-empty point set.
SearchResult max_family(const CandidatePool& pool, const SearchOptions& options = {});

SearchResult max_thrackle(const PointSet& points, const VariantFlags& flags,
                          const PoolLimits& limits = {}, const SearchOptions& options = {});

/// Largest family whose every hull contains point p.
SearchResult max_through_point(const PointSet& points, Index p, const VariantFlags& flags,
                               const PoolLimits& limits = {}, const SearchOptions& options = {});

/// Calls visit once for every family (as pool indices, ascending) of exactly
/// `size` members. Returns the number of families visited.
std::uint64_t for_each_family_of_size(const CandidatePool& pool, std::size_t size,
                                      const std::function<void(const std::vector<Index>&)>& visit);

/// Instance made of the given pool entries, carrying the pool's flags.
Instance family_instance(const CandidatePool& pool, const std::vector<Index>& members);

}  // namespace cht
