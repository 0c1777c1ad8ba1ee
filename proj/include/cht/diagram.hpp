// Boundary diagram, wedges and lefties: the per-vertex weight argument
// behind the 2n bound, as executable checks over concrete instances.
#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cht/instance.hpp"

namespace cht {

/// A point pair carrying the boundary segments of the family placed on it.
struct WeightedSegment {
  Index a;  // a < b
  Index b;
  int weight = 0;
  std::vector<Index> contributors;  // hull indices, ascending, with repeats for multisets
  int segment_hulls = 0;            // contributors that are the segment itself (weight 3 each)
  int polygon_hulls = 0;            // contributors with >= 3 vertices (weight 1 each)

  /// Both kinds contribute; impossible without containment.
  bool mixed() const { return segment_hulls > 0 && polygon_hulls > 0; }
};

struct BoundaryDiagram {
  std::vector<WeightedSegment> segments;  // sorted by (a, b)

  long total_weight() const;
  /// Segment on {u, v}, if present.
  const WeightedSegment* find(Index u, Index v) const;
  /// Segments with u as an endpoint.
  std::vector<const WeightedSegment*> incident(Index u) const;
};

/// Diagram of a verified instance (valid under its own flags, every hull of
/// size >= 2). Throws std::invalid_argument otherwise.
BoundaryDiagram boundary_diagram(const Instance& inst);

/// Same construction without the validity precondition; for demonstrating
/// what the lemma checks detect on broken instances.
BoundaryDiagram boundary_diagram_unverified(const Instance& inst);

/// The angle of a hull at one of its vertices: from p->right_end
/// counterclockwise to p->left_end.
struct Wedge {
  Index apex;
  Index left_end;
  Index right_end;
  Index hull;

  bool degenerate() const { return left_end == right_end; }
  friend bool operator==(const Wedge&, const Wedge&) = default;
};

/// Throws std::invalid_argument if p is not a vertex of the hull.
Wedge wedge_at(Index p, Index hull, const Instance& inst);

/// All wedges at p, ordered by hull index.
std::vector<Wedge> wedges_at(Index p, const Instance& inst);

/// True iff direction p->d lies in the closed wedge.
bool wedge_contains_direction(const Wedge& w, Index d, const PointSet& points);

/// The wedges share only their apex.
bool wedges_disjoint(const Wedge& u, const Wedge& v, const PointSet& points);

struct LeftieResult {
  bool leftie = false;
  std::optional<Index> witness;  // lowest-index witnessing hull
};

/// Whether some hull lies to the left of p->a. The apex p itself is left by
/// convention, so a hull through p can witness. Singleton hulls never
/// witness. Throws std::invalid_argument if p == a.
LeftieResult is_leftie(Index p, Index a, const Instance& inst);

/// Sum of weights of the diagram segments at p that are non-lefties from p.
long nonleftie_weight_at(Index p, const BoundaryDiagram& diagram, const Instance& inst);

/// Upper bound on nonleftie_weight_at for the instance's flags, or nothing
/// when non-point triple intersections are allowed (the argument needs them).
std::optional<long> nonleftie_weight_bound(const VariantFlags& flags);

struct WedgePairViolation {
  Index apex;
  Wedge first;
  Wedge second;
};

struct LeftieLemmaReport {
  /// Diagram segments that are lefties from both endpoints, with witnesses.
  struct BothEnds {
    Index a;
    Index b;
    Index witness_from_a;
    Index witness_from_b;
  };
  std::vector<BothEnds> leftie_from_both;
  /// Apex-disjoint wedge pairs whose left sides are both non-lefties.
  std::vector<WedgePairViolation> nonleftie_wedge_pairs;

  bool ok() const { return leftie_from_both.empty() && nonleftie_wedge_pairs.empty(); }
};

LeftieLemmaReport check_leftie_lemmas(const Instance& inst, const BoundaryDiagram& diagram);

/// For each hull an index pair {u, v} drawn from it.
using LinearInjection = std::vector<std::pair<Index, Index>>;

/// Backtracking search for pairs S' in S, one per hull, forming a linear
/// thrackle of m distinct segments. Requires a valid instance in convex
/// position with m == n; throws std::invalid_argument otherwise. Returns
/// nothing only after every choice was ruled out.
std::optional<LinearInjection> extract_underlying_linear(const Instance& inst);

/// Backtracking core without the convex-position / m == n precondition.
std::optional<LinearInjection> find_linear_injection(const Instance& inst);

}  // namespace cht
