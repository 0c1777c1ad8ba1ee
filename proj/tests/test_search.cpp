#include <gtest/gtest.h>

#include "cht/constructions.hpp"
#include "cht/search.hpp"
#include "cht/verify.hpp"
#include "oracles.hpp"

using namespace cht;

namespace {

oracle::FlatResult flat(const PointSet& P, bool containment) {
  std::vector<Point> pts(P.points().begin(), P.points().end());
  return oracle::flat_max_family(
      pts, containment, [](const std::vector<Point>& s) { return ConvexRegion::hull_of(s); },
      [](const ConvexRegion& a, const ConvexRegion& b) {
        return ConvexRegion::hull_of(oracle::intersection_vertices(a, b));
      });
}

PointSet random_general_position(oracle::RandomPoints& rnd, std::size_t n) {
  for (;;) {
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p = rnd.grid_point(-5, 5);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    PointSet P(pts);
    if (check_general_position(P).empty()) return P;
  }
}

}  // namespace

TEST(Pool, Counts) {
  EXPECT_EQ(enumerate_candidates(PointSet({{0, 0}, {1, 0}, {0, 1}}), {}).size(), 4u);
  EXPECT_EQ(enumerate_candidates(parabola_points(4), {}).size(), 11u);
  PointSet inner({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  // only the full set loses a member to canonicalization
  std::size_t expected = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<Point> s;
    for (Index i = 0; i < 4; ++i)
      if (mask >> i & 1) s.push_back(inner[i]);
    expected += oracle::extreme_points(s).size() == s.size();
  }
  EXPECT_EQ(enumerate_candidates(inner, {}).size(), expected);
  EXPECT_EQ(expected, 10u);
}

TEST(Pool, SortedAndMultiset) {
  auto pool = enumerate_candidates(parabola_points(4), {});
  for (Index i = 1; i < pool.size(); ++i) EXPECT_LT(pool.hull(i - 1), pool.hull(i));
  auto multi = enumerate_candidates(parabola_points(4), {.allow_multiset = true});
  EXPECT_EQ(multi.size(), 26u);  // 11 doubled plus 4 singletons
  EXPECT_EQ(enumerate_candidates(parabola_points(4), {.allow_containment = true}).size(), 15u);
}

TEST(Pool, Limits) {
  EXPECT_THROW(enumerate_candidates(parabola_points(13), {}), std::invalid_argument);
  oracle::RandomPoints rnd(23);
  PointSet ten = random_general_position(rnd, 10);
  ASSERT_FALSE(in_convex_position(ten));
  EXPECT_THROW(enumerate_candidates(ten, {}), std::invalid_argument);
  PoolLimits override;
  override.override_points = 3;
  EXPECT_THROW(enumerate_candidates(parabola_points(4), {}, override), std::invalid_argument);
  EXPECT_THROW(enumerate_candidates(PointSet({{0, 0}, {1, 0}, {2, 0}}), {}), std::invalid_argument);
  EXPECT_NO_THROW(enumerate_candidates(PointSet({{0, 0}, {1, 0}, {2, 0}}), {.allow_collinear = true}));
}

TEST(Search, Parabola) {
  for (std::size_t n = 3; n <= 6; ++n) {
    auto r = max_thrackle(parabola_points(n), {});
    EXPECT_EQ(r.max_size, n);
    EXPECT_TRUE(r.exhaustive);
    auto inst = Instance::build(parabola_points(n), {});
    inst.family = r.witness;
    EXPECT_TRUE(verify(inst).valid);
  }
}

TEST(Search, TinySets) {
  EXPECT_EQ(max_thrackle(parabola_points(2), {}).max_size, 1u);
  EXPECT_EQ(max_thrackle(parabola_points(1), {}).max_size, 1u);
  auto through = max_through_point(PointSet({{0, 0}, {1, 0}, {0, 1}}), 0, {});
  EXPECT_EQ(through.max_size, 2u);
  EXPECT_THROW(max_through_point(parabola_points(3), 7, {}), std::invalid_argument);
}

TEST(Search, Counterexample) {
  auto r = max_thrackle(gen_counterexample(6).points, {});
  EXPECT_GE(r.max_size, 7u);
  EXPECT_LE(r.max_size, 12u);
  auto inst = gen_counterexample(6);
  inst.family = r.witness;
  EXPECT_TRUE(verify(inst).valid);
}

TEST(Search, ThroughPoint) {
  for (Index p = 0; p < 5; ++p) EXPECT_LE(max_through_point(parabola_points(5), p, {}).max_size, 4u);
  auto star = gen_star_neighbors(6);
  EXPECT_GE(max_through_point(star.points, 0, {}).max_size, 5u);
}

TEST(Search, Deterministic) {
  auto a = max_thrackle(parabola_points(5), {});
  auto b = max_thrackle(parabola_points(5), {});
  EXPECT_EQ(a.witness, b.witness);
  EXPECT_EQ(a.nodes_explored, b.nodes_explored);
}

TEST(Search, NodeBudget) {
  SearchOptions o;
  o.node_budget = 10;
  auto r = max_thrackle(parabola_points(6), {}, {}, o);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_LE(r.max_size, 6u);
}

TEST(Search, MonotoneInFlags) {
  oracle::RandomPoints rnd(17);
  std::vector<PointSet> sets{parabola_points(4), parabola_points(5), random_general_position(rnd, 5)};
  for (const auto& P : sets) {
    auto base = max_thrackle(P, {}).max_size;
    EXPECT_GE(max_thrackle(P, {.allow_containment = true}).max_size, base);
    EXPECT_GE(max_thrackle(P, {.allow_collinear = true}).max_size, base);
    EXPECT_GE(max_thrackle(P, {.allow_containment = true, .allow_multiset = true}).max_size,
              max_thrackle(P, {.allow_containment = true}).max_size);
    EXPECT_LE(base, 2 * P.size());
  }
  auto tri = max_thrackle(parabola_points(4), {.allow_triple_interior = true});
  EXPECT_GE(tri.max_size, max_thrackle(parabola_points(4), {}).max_size);
}

TEST(Search, ConvexCeilingAtSeven) {
  PointSet hept({{0, 0}, {4, -1}, {7, 1}, {8, 5}, {5, 8}, {1, 7}, {-1, 3}});
  ASSERT_TRUE(in_convex_position(hept));
  ASSERT_TRUE(check_general_position(hept).empty());
  EXPECT_EQ(max_thrackle(hept, {}).max_size, 7u);
}

TEST(Search, MatchesFlatEnumeration) {
  oracle::RandomPoints rnd(41);
  std::vector<PointSet> sets{parabola_points(3), parabola_points(4), parabola_points(5),
                             PointSet({{0, 0}, {4, 0}, {0, 4}, {1, 1}}),
                             PointSet({{0, 0}, {6, 0}, {0, 6}, {1, 2}, {2, 1}})};
  for (int t = 0; t < 6; ++t) sets.push_back(random_general_position(rnd, 4 + t % 2));
  for (const auto& P : sets) {
    EXPECT_EQ(max_thrackle(P, {}).max_size, flat(P, false).max_size);
    EXPECT_EQ(max_thrackle(P, {.allow_containment = true}).max_size, flat(P, true).max_size);
  }
}

TEST(Search, FamiliesOfSize) {
  auto pool = enumerate_candidates(parabola_points(4), {});
  std::uint64_t seen = 0;
  auto count = for_each_family_of_size(pool, 4, [&](const std::vector<Index>& members) {
    ++seen;
    EXPECT_TRUE(verify(family_instance(pool, members)).valid);
  });
  EXPECT_EQ(count, seen);
  EXPECT_GT(count, 0u);
  EXPECT_EQ(for_each_family_of_size(pool, 5, [](const auto&) {}), 0u);
}
