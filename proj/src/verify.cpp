#include "cht/verify.hpp"

#include <stdexcept>
#include <string>

namespace cht {

namespace {

std::size_t packed(Index i, Index j, std::size_t m) {
  // Row i of the strict upper triangle starts after i*m - i*(i+1)/2 entries.
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

// A is a subset of B iff every vertex of A lies in B (both convex).
bool region_subset(const ConvexRegion& a, const ConvexRegion& b) {
  for (const auto& v : a.vertices())
    if (point_in_region(v, b) == Location::outside) return false;
  return true;
}

}  // namespace

void validate_structure(const Instance& inst) {
  for (Index h = 0; h < inst.family.size(); ++h) {
    const auto& idx = inst.family[h].indices();
    if (idx.empty()) throw std::invalid_argument("hull " + std::to_string(h) + " is empty");
    for (Index i : idx) {
      if (i >= inst.points.size()) {
        throw std::invalid_argument("hull " + std::to_string(h) + " refers to point " +
                                    std::to_string(i) + " but n=" +
                                    std::to_string(inst.points.size()));
      }
    }
  }
}

FamilyGeometry::FamilyGeometry(const Instance& inst) {
  validate_structure(inst);
  const std::size_t m = inst.family.size();
  hulls_.reserve(m);
  for (const auto& h : inst.family) hulls_.push_back(hull_region(h, inst.points));
  pairs_.reserve(m * (m - (m > 0 ? 1 : 0)) / 2);
  for (Index i = 0; i < m; ++i)
    for (Index j = i + 1; j < m; ++j) pairs_.push_back(intersect_regions(hulls_[i], hulls_[j]));
}

const ConvexRegion& FamilyGeometry::pair(Index i, Index j) const {
  if (i == j) return hulls_[i];
  if (i > j) std::swap(i, j);
  return pairs_[packed(i, j, hulls_.size())];
}

bool triple_region_allowed(const ConvexRegion& region, const PointSet& points) {
  if (region.empty()) return true;
  if (region.dimension() > 0) return false;
  return points.index_of(region.vertices()[0]).has_value();
}

VerificationReport verify(const Instance& inst) {
  const FamilyGeometry geo(inst);
  const VariantFlags flags = inst.flags.normalized();
  const std::size_t m = inst.family.size();
  VerificationReport report;

  for (Index i = 0; i < m; ++i) {
    for (Index j = i + 1; j < m; ++j) {
      if (inst.family[i] == inst.family[j]) {
        if (!flags.allow_multiset) report.condition1_violations.push_back({i, j, PairIssue::duplicate});
      } else if (!flags.containment_allowed() && (region_subset(geo.hull(i), geo.hull(j)) ||
                                                  region_subset(geo.hull(j), geo.hull(i)))) {
        report.condition1_violations.push_back({i, j, PairIssue::containment});
      }
      if (geo.pair(i, j).empty()) report.condition2_violations.emplace_back(i, j);
    }
  }

  if (!flags.allow_triple_interior) {
    for (Index i = 0; i < m; ++i) {
      for (Index j = i + 1; j < m; ++j) {
        const auto& ij = geo.pair(i, j);
        if (ij.empty()) continue;
        // A single point of P can only shrink to itself or vanish.
        if (ij.dimension() == 0 && inst.points.index_of(ij.vertices()[0])) continue;
        for (Index k = j + 1; k < m; ++k) {
          auto region = intersect_regions(ij, geo.hull(k));
          if (!triple_region_allowed(region, inst.points)) {
            report.condition3_violations.push_back({{i, j, k}, std::move(region)});
          }
        }
      }
    }
  }

  if (!flags.allow_collinear) report.general_position_violations = check_general_position(inst.points);

  report.valid = report.condition1_violations.empty() && report.condition2_violations.empty() &&
                 report.condition3_violations.empty() &&
                 report.general_position_violations.empty();
  return report;
}

ConvexRegion pairwise_intersection_class(const Instance& inst, Index i, Index j) {
  if (i >= inst.family.size() || j >= inst.family.size()) {
    throw std::out_of_range("hull index out of range");
  }
  validate_structure(inst);
  const auto a = hull_region(inst.family[i], inst.points);
  if (i == j) return a;
  return intersect_regions(a, hull_region(inst.family[j], inst.points));
}

}  // namespace cht
