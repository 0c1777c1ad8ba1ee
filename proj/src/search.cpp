#include "cht/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "cht/verify.hpp"

namespace cht {

namespace {

constexpr std::size_t kTripleCacheMaxPool = 600;

std::size_t triple_slot(Index i, Index j, Index k) {
  // i < j < k; combinatorial number system.
  return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

bool region_subset(const ConvexRegion& a, const ConvexRegion& b) {
  for (const auto& v : a.vertices())
    if (point_in_region(v, b) == Location::outside) return false;
  return true;
}

}  // namespace

CandidatePool::CandidatePool(PointSet points, VariantFlags flags, std::vector<HullSet> hulls)
    : points_(std::move(points)), flags_(flags.normalized()), hulls_(std::move(hulls)) {
  const std::size_t n = hulls_.size();
  regions_.reserve(n);
  for (const auto& h : hulls_) regions_.push_back(hull_region(h, points_));
  compat_.assign(n * n, 0);
  pair_regions_.resize(n * n);
  pair_kind_.assign(n * n, PairKind::none);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      bool ok;
      ConvexRegion meet;
      if (hulls_[i] == hulls_[j]) {
        ok = flags_.allow_multiset;
        meet = regions_[i];
      } else {
        ok = flags_.containment_allowed() || (!region_subset(regions_[i], regions_[j]) &&
                                              !region_subset(regions_[j], regions_[i]));
        if (ok) {
          meet = intersect_regions(regions_[i], regions_[j]);
          ok = !meet.empty();
        }
      }
      if (!ok) continue;
      PairKind kind = PairKind::other;
      if (meet.dimension() == 0 && points_.index_of(meet.vertices()[0])) kind = PairKind::vertex_of_p;
      for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
        compat_[a * n + b] = 1;
        pair_kind_[a * n + b] = kind;
      }
      pair_regions_[j * n + i] = meet;
      pair_regions_[i * n + j] = std::move(meet);
    }
  }
  use_triple_cache_ = n <= kTripleCacheMaxPool && !flags_.allow_triple_interior;
  if (use_triple_cache_ && n >= 3) triple_cache_.assign(triple_slot(n - 3, n - 2, n - 1) + 1, 0);
}

bool CandidatePool::triple_ok(Index i, Index j, Index k) const {
  if (flags_.allow_triple_interior) return true;
  if (i > j) std::swap(i, j);
  if (j > k) std::swap(j, k);
  if (i > j) std::swap(i, j);
  const std::size_t n = size();
  // If two of them already meet in a point of P, so do all three (or not at all).
  if (pair_kind_[i * n + j] == PairKind::vertex_of_p || pair_kind_[i * n + k] == PairKind::vertex_of_p ||
      pair_kind_[j * n + k] == PairKind::vertex_of_p) {
    return true;
  }
  std::uint8_t* slot = use_triple_cache_ ? &triple_cache_[triple_slot(i, j, k)] : nullptr;
  if (slot && *slot) return *slot == 1;
  const bool ok = triple_region_allowed(intersect_regions(pair_regions_[i * n + j], regions_[k]), points_);
  if (slot) *slot = ok ? 1 : 2;
  return ok;
}

CandidatePool CandidatePool::restricted_to_point(Index p) const {
  if (p >= points_.size()) throw std::invalid_argument("point index " + std::to_string(p) + " out of range");
  std::vector<HullSet> keep;
  for (const auto& h : hulls_)
    if (h.contains(p)) keep.push_back(h);
  return CandidatePool(points_, flags_, std::move(keep));
}

CandidatePool enumerate_candidates(const PointSet& points, const VariantFlags& raw_flags,
                                   const PoolLimits& limits) {
  const VariantFlags flags = raw_flags.normalized();
  const std::size_t n = points.size();
  const bool convex = in_convex_position(points);
  const std::size_t limit =
      limits.override_points.value_or(convex ? limits.convex_position : limits.general_position);
  if (n > limit) {
    throw std::invalid_argument("point set of size " + std::to_string(n) + " exceeds the search limit " +
                                std::to_string(limit) + " (" +
                                (convex ? "convex position" : "general position") + ")");
  }
  if (n >= 63) throw std::invalid_argument("point set too large to enumerate subsets");
  if (!flags.allow_collinear && !check_general_position(points).empty()) {
    throw std::invalid_argument("point set has collinear triples; allow collinear points to search it");
  }

  std::vector<HullSet> hulls;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < end; ++mask) {
    const int count = std::popcount(mask);
    // a singleton {p} survives next to hulls through p only when containment is allowed
    if (count < 2 && !flags.containment_allowed()) continue;
    std::vector<Index> idx;
    for (Index i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    HullSet h = canonicalize_hull(idx, points);
    if (h.size() != static_cast<std::size_t>(count)) continue;
    hulls.push_back(h);
    if (flags.allow_multiset && count >= 2) hulls.push_back(std::move(h));
  }
  std::sort(hulls.begin(), hulls.end());
  return CandidatePool(points, flags, std::move(hulls));
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(const CandidatePool& pool, const SearchOptions& options) : pool_(pool), options_(options) {}

  void run() {
    std::vector<Index> all(pool_.size());
    for (Index i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<Index> chosen;
    expand(chosen, all);
  }

  std::size_t best() const { return best_.size(); }
  const std::vector<Index>& witness() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }
  bool exhausted() const { return !aborted_; }

 private:
  void expand(std::vector<Index>& chosen, const std::vector<Index>& cand) {
    if (aborted_) return;
    if (options_.node_budget && nodes_ >= *options_.node_budget) {
      aborted_ = true;
      return;
    }
    ++nodes_;
    if (chosen.size() > best_.size()) best_ = chosen;
    std::vector<Index> next;
    for (std::size_t pos = 0; pos < cand.size(); ++pos) {
      if (chosen.size() + (cand.size() - pos) <= best_.size()) return;
      const Index h = cand[pos];
      next.clear();
      for (std::size_t q = pos + 1; q < cand.size(); ++q) {
        const Index x = cand[q];
        if (!pool_.compatible(h, x)) continue;
        bool ok = true;
        for (Index c : chosen) {
          if (!pool_.triple_ok(c, h, x)) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(x);
      }
      chosen.push_back(h);
      expand(chosen, next);
      chosen.pop_back();
      if (aborted_) return;
    }
  }

  const CandidatePool& pool_;
  const SearchOptions& options_;
  std::vector<Index> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

SearchResult search_with_singleton(const CandidatePool& pool, Index singleton, const SearchOptions& options) {
  SearchResult out;
  if (pool.points().empty()) return out;
  BranchAndBound bb(pool, options);
  bb.run();
  out.nodes_explored = bb.nodes();
  out.exhaustive = bb.exhausted();
  for (Index i : bb.witness()) out.witness.push_back(pool.hull(i));
  out.max_size = out.witness.size();
  if (out.max_size == 0) {
    const Index only[] = {singleton};
    out.witness.push_back(canonicalize_hull(only, pool.points()));
    out.max_size = 1;
  }
  return out;
}

}  // namespace

SearchResult max_family(const CandidatePool& pool, const SearchOptions& options) {
  return search_with_singleton(pool, 0, options);
}

SearchResult max_thrackle(const PointSet& points, const VariantFlags& flags, const PoolLimits& limits,
                          const SearchOptions& options) {
  return search_with_singleton(enumerate_candidates(points, flags, limits), 0, options);
}

SearchResult max_through_point(const PointSet& points, Index p, const VariantFlags& flags,
                               const PoolLimits& limits, const SearchOptions& options) {
  if (p >= points.size()) throw std::invalid_argument("point index " + std::to_string(p) + " out of range");
  const auto pool = enumerate_candidates(points, flags, limits).restricted_to_point(p);
  return search_with_singleton(pool, p, options);
}

std::uint64_t for_each_family_of_size(const CandidatePool& pool, std::size_t size,
                                      const std::function<void(const std::vector<Index>&)>& visit) {
  std::uint64_t count = 0;
  std::vector<Index> chosen;
  std::function<void(const std::vector<Index>&)> expand = [&](const std::vector<Index>& cand) {
    if (chosen.size() == size) {
      ++count;
      visit(chosen);
      return;
    }
    for (std::size_t pos = 0; pos < cand.size(); ++pos) {
      if (chosen.size() + (cand.size() - pos) < size) return;
      const Index h = cand[pos];
      std::vector<Index> next;
      for (std::size_t q = pos + 1; q < cand.size(); ++q) {
        const Index x = cand[q];
        if (!pool.compatible(h, x)) continue;
        if (std::all_of(chosen.begin(), chosen.end(), [&](Index c) { return pool.triple_ok(c, h, x); })) {
          next.push_back(x);
        }
      }
      chosen.push_back(h);
      expand(next);
      chosen.pop_back();
    }
  };
  std::vector<Index> all(pool.size());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  if (size == 0) {
    visit(chosen);
    return 1;
  }
  expand(all);
  return count;
}

Instance family_instance(const CandidatePool& pool, const std::vector<Index>& members) {
  Instance inst;
  inst.points = pool.points();
  inst.flags = pool.flags();
  for (Index i : members) inst.family.push_back(pool.hull(i));
  return inst;
}

}  // namespace cht
