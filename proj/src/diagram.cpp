#include "cht/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "cht/verify.hpp"

namespace cht {

long BoundaryDiagram::total_weight() const {
  long total = 0;
  for (const auto& s : segments) total += s.weight;
  return total;
}

const WeightedSegment* BoundaryDiagram::find(Index u, Index v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(segments.begin(), segments.end(), std::pair{u, v},
                             [](const WeightedSegment& s, const std::pair<Index, Index>& key) {
                               return std::pair{s.a, s.b} < key;
                             });
  if (it != segments.end() && it->a == u && it->b == v) return &*it;
  return nullptr;
}

std::vector<const WeightedSegment*> BoundaryDiagram::incident(Index u) const {
  std::vector<const WeightedSegment*> out;
  for (const auto& s : segments)
    if (s.a == u || s.b == u) out.push_back(&s);
  return out;
}

BoundaryDiagram boundary_diagram_unverified(const Instance& inst) {
  validate_structure(inst);
  std::map<std::pair<Index, Index>, WeightedSegment> acc;
  auto bump = [&](Index u, Index v, Index hull, bool is_segment) {
    if (u > v) std::swap(u, v);
    auto& s = acc[{u, v}];
    s.a = u;
    s.b = v;
    s.contributors.push_back(hull);
    if (is_segment) {
      s.weight += 3;
      ++s.segment_hulls;
    } else {
      s.weight += 1;
      ++s.polygon_hulls;
    }
  };
  for (Index h = 0; h < inst.family.size(); ++h) {
    if (inst.family[h].size() < 2) {
      throw std::invalid_argument("boundary diagram: hull " + std::to_string(h) + " is a single point");
    }
    // Canonical hulls carry no collinear boundary points, so these are the
    // maximal sides even when collinear points are allowed.
    const auto ring = ccw_vertices(inst.family[h], inst.points);
    if (ring.size() == 2) {
      bump(ring[0], ring[1], h, true);
      continue;
    }
    for (std::size_t i = 0; i < ring.size(); ++i) bump(ring[i], ring[(i + 1) % ring.size()], h, false);
  }
  BoundaryDiagram d;
  d.segments.reserve(acc.size());
  for (auto& [key, seg] : acc) {
    std::sort(seg.contributors.begin(), seg.contributors.end());
    d.segments.push_back(std::move(seg));
  }
  return d;
}

BoundaryDiagram boundary_diagram(const Instance& inst) {
  if (!verify(inst).valid) throw std::invalid_argument("boundary diagram: instance does not verify");
  return boundary_diagram_unverified(inst);
}

Wedge wedge_at(Index p, Index hull, const Instance& inst) {
  if (hull >= inst.family.size()) throw std::invalid_argument("wedge_at: hull index out of range");
  const auto ring = ccw_vertices(inst.family[hull], inst.points);
  auto it = std::find(ring.begin(), ring.end(), p);
  if (it == ring.end() || ring.size() < 2) {
    throw std::invalid_argument("wedge_at: point " + std::to_string(p) + " is not a vertex of hull " +
                                std::to_string(hull));
  }
  const std::size_t i = static_cast<std::size_t>(it - ring.begin());
  const std::size_t k = ring.size();
  // Counterclockwise ring: the previous vertex is left of p->next.
  return Wedge{p, ring[(i + k - 1) % k], ring[(i + 1) % k], hull};
}

std::vector<Wedge> wedges_at(Index p, const Instance& inst) {
  std::vector<Wedge> out;
  for (Index h = 0; h < inst.family.size(); ++h) {
    if (inst.family[h].size() >= 2 && inst.family[h].contains(p)) out.push_back(wedge_at(p, h, inst));
  }
  return out;
}

bool wedge_contains_direction(const Wedge& w, Index d, const PointSet& points) {
  const Point& apex = points[w.apex];
  const Point& dir = points[d];
  if (w.degenerate()) return same_ray(apex, points[w.right_end], dir);
  return orientation(apex, points[w.right_end], dir) >= 0 &&
         orientation(apex, dir, points[w.left_end]) >= 0;
}

bool wedges_disjoint(const Wedge& u, const Wedge& v, const PointSet& points) {
  return !wedge_contains_direction(u, v.right_end, points) &&
         !wedge_contains_direction(u, v.left_end, points) &&
         !wedge_contains_direction(v, u.right_end, points) &&
         !wedge_contains_direction(v, u.left_end, points);
}

LeftieResult is_leftie(Index p, Index a, const Instance& inst) {
  if (p == a) throw std::invalid_argument("is_leftie: p == a");
  const Point& origin = inst.points[p];
  const Point& target = inst.points[a];
  for (Index h = 0; h < inst.family.size(); ++h) {
    const auto& idx = inst.family[h].indices();
    if (idx.size() < 2) continue;
    const bool left = std::all_of(idx.begin(), idx.end(), [&](Index v) {
      return v == p || left_of_vector(origin, target, inst.points[v]);
    });
    if (left) return {true, h};
  }
  return {};
}

long nonleftie_weight_at(Index p, const BoundaryDiagram& diagram, const Instance& inst) {
  long total = 0;
  for (const auto* s : diagram.incident(p)) {
    const Index other = s->a == p ? s->b : s->a;
    if (!is_leftie(p, other, inst).leftie) total += s->weight;
  }
  return total;
}

std::optional<long> nonleftie_weight_bound(const VariantFlags& raw) {
  const VariantFlags f = raw.normalized();
  if (f.allow_triple_interior) return std::nullopt;
  if (f.allow_multiset) return 8;
  if (f.allow_containment && f.allow_collinear) return 8;
  if (f.allow_containment || f.allow_collinear) return 7;
  return 6;
}

LeftieLemmaReport check_leftie_lemmas(const Instance& inst, const BoundaryDiagram& diagram) {
  LeftieLemmaReport report;
  std::map<std::pair<Index, Index>, LeftieResult> cache;
  auto leftie = [&](Index p, Index a) -> const LeftieResult& {
    auto it = cache.find({p, a});
    if (it == cache.end()) it = cache.emplace(std::pair{p, a}, is_leftie(p, a, inst)).first;
    return it->second;
  };

  for (const auto& s : diagram.segments) {
    const auto& from_a = leftie(s.a, s.b);
    const auto& from_b = leftie(s.b, s.a);
    if (from_a.leftie && from_b.leftie) {
      report.leftie_from_both.push_back({s.a, s.b, *from_a.witness, *from_b.witness});
    }
  }

  for (Index p = 0; p < inst.points.size(); ++p) {
    const auto wedges = wedges_at(p, inst);
    for (std::size_t i = 0; i < wedges.size(); ++i) {
      for (std::size_t j = i + 1; j < wedges.size(); ++j) {
        if (!wedges_disjoint(wedges[i], wedges[j], inst.points)) continue;
        if (!leftie(p, wedges[i].left_end).leftie && !leftie(p, wedges[j].left_end).leftie) {
          report.nonleftie_wedge_pairs.push_back({p, wedges[i], wedges[j]});
        }
      }
    }
  }
  return report;
}

namespace {

struct SegmentChoice {
  Index u;
  Index v;
  ConvexRegion region;
};

bool segments_compatible(const SegmentChoice& s, const SegmentChoice& t) {
  if (s.u == t.u && s.v == t.v) return false;
  const auto meet = intersect_regions(s.region, t.region);
  // Two distinct segments in general position meet in at most one point;
  // a shared stretch means one contains part of the other.
  return meet.dimension() == 0;
}

}  // namespace

std::optional<LinearInjection> find_linear_injection(const Instance& inst) {
  validate_structure(inst);
  const std::size_t m = inst.family.size();
  std::vector<std::vector<SegmentChoice>> options(m);
  for (Index h = 0; h < m; ++h) {
    const auto& idx = inst.family[h].indices();
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        options[h].push_back({idx[i], idx[j],
                              ConvexRegion::hull_of({inst.points[idx[i]], inst.points[idx[j]]})});
    if (options[h].empty()) return std::nullopt;  // a singleton has no pair
  }

  std::vector<const SegmentChoice*> chosen(m, nullptr);
  // domains[h] = surviving option indices for hull h.
  std::vector<std::vector<std::size_t>> domains(m);
  for (Index h = 0; h < m; ++h)
    for (std::size_t c = 0; c < options[h].size(); ++c) domains[h].push_back(c);

  std::function<bool(Index, std::vector<std::vector<std::size_t>>&)> assign =
      [&](Index h, std::vector<std::vector<std::size_t>>& dom) -> bool {
    if (h == m) return true;
    for (std::size_t c : dom[h]) {
      const SegmentChoice& pick = options[h][c];
      auto next = dom;
      bool dead = false;
      for (Index later = h + 1; later < m && !dead; ++later) {
        std::vector<std::size_t> keep;
        for (std::size_t oc : next[later]) {
          const SegmentChoice& cand = options[later][oc];
          if (!segments_compatible(pick, cand)) continue;
          bool triple_ok = true;
          const auto pc = intersect_regions(pick.region, cand.region);
          for (Index prev = 0; prev < h && triple_ok; ++prev) {
            triple_ok = triple_region_allowed(intersect_regions(pc, chosen[prev]->region), inst.points);
          }
          if (triple_ok) keep.push_back(oc);
        }
        if (keep.empty()) dead = true;
        next[later] = std::move(keep);
      }
      if (dead) continue;
      chosen[h] = &pick;
      if (assign(h + 1, next)) return true;
    }
    chosen[h] = nullptr;
    return false;
  };

  if (!assign(0, domains)) return std::nullopt;
  LinearInjection out;
  out.reserve(m);
  for (const auto* c : chosen) out.emplace_back(c->u, c->v);
  return out;
}

std::optional<LinearInjection> extract_underlying_linear(const Instance& inst) {
  if (!verify(inst).valid) throw std::invalid_argument("extract_underlying_linear: instance does not verify");
  if (!in_convex_position(inst.points)) {
    throw std::invalid_argument("extract_underlying_linear: points are not in convex position");
  }
  if (inst.m() != inst.n()) {
    throw std::invalid_argument("extract_underlying_linear: needs m == n (m=" + std::to_string(inst.m()) +
                                ", n=" + std::to_string(inst.n()) + ")");
  }
  return find_linear_injection(inst);
}

}  // namespace cht
