// Generators for the known convex hull thrackle constructions.
//
// Every generator returns an instance whose family is sorted
// lexicographically and whose flags are the relaxations under which the
// construction is a thrackle.
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cht/instance.hpp"

namespace cht {

enum class ConstructionName {
  counterexample,
  odd_circle,
  star_neighbors,
  gossett,
  triple_blocks,
  double_star,
  parabola_points,
};

std::string_view to_string(ConstructionName name);
std::optional<ConstructionName> parse_construction_name(std::string_view text);
const std::vector<ConstructionName>& all_construction_names();

/// Smallest n accepted by the generator.
std::size_t min_points(ConstructionName name);
/// Whether gen(name, n) is defined (range and parity/divisibility).
bool accepts(ConstructionName name, std::size_t n);

/// Dispatches to the generator below. parabola_points yields an instance with
/// an empty family. Throws std::invalid_argument when !accepts(name, n).
Instance generate(ConstructionName name, std::size_t n);

/// (i, i^2) for i = 0..n-1: convex position, no three collinear.
PointSet parabola_points(std::size_t n);

/// n points and n+1 hulls, for n >= 6.
///
/// Point layout: 0 = p, 1 = p', 2 = q, 3 = q' (the interior point), then
/// r_1..r_{n-4}. The r's lie on a convex arc between p and p' that bulges
/// towards q', so r_1..r_{n-4}, p', p are in convex position and are seen
/// from q' in that order. The family is the n-1 triangles q'xy over
/// consecutive x, y around q', plus {p, p'} with the even r's and {p, p'}
/// with the odd r's.
Instance gen_counterexample(std::size_t n);

/// Odd regular polygon (rational points on the unit circle), each point
/// joined to the two almost opposite ones: n segments.
Instance gen_odd_circle(std::size_t n);

/// Point 0 joined to every other point plus the segment between its two
/// hull neighbours: n segments.
Instance gen_star_neighbors(std::size_t n);

/// Star at point 0 plus every second triangle between consecutive star
/// segments: floor(3(n-1)/2) hulls, valid only with containment allowed.
Instance gen_gossett(std::size_t n);

/// Convex position split into three arcs of n/3; every triangle with one
/// vertex per arc. Valid only with non-point triple intersections allowed.
Instance gen_triple_blocks(std::size_t n);

/// Every star segment at point 0 taken twice: 2n-2 hulls, a multiset family.
Instance gen_double_star(std::size_t n);

}  // namespace cht
