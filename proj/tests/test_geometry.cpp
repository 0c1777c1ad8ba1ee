#include <gtest/gtest.h>

#include <stdexcept>

#include "cht/geometry.hpp"
#include "oracles.hpp"

using namespace cht;

namespace {

ConvexRegion R(std::vector<Point> pts) { return ConvexRegion::hull_of(std::move(pts)); }

ConvexRegion random_region(oracle::RandomPoints& rnd) {
  std::size_t k = 1 + rnd.below(5);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) pts.push_back(rnd.point());
  return R(pts);
}

}  // namespace

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orientation({0, 0}, {1, 1}, {2, 2}), 0);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1);
}

TEST(Orientation, Antisymmetry) {
  oracle::RandomPoints rnd(11);
  for (int t = 0; t < 500; ++t) {
    Point a = rnd.point(), b = rnd.point(), c = rnd.point();
    EXPECT_EQ(orientation(a, b, c), -orientation(a, c, b));
    EXPECT_EQ(orientation(a, b, c), orientation(b, c, a));
  }
}

TEST(Orientation, ExactOnTinyDifferences) {
  Point a(Rational(0), Rational(0));
  Point b(Rational(1, 1000000007), Rational(1, 1000000009));
  Point c = Point(b.x * 2, b.y * 2);
  EXPECT_EQ(orientation(a, b, c), 0);
  Point d(c.x, c.y + Rational("1/1000000000000"));
  EXPECT_EQ(orientation(a, b, d), 1);
}

TEST(Hull, BoundaryPointIsNotExtreme) {
  std::vector<Point> pts{{0, 0}, {2, 0}, {0, 2}, {1, 1}};
  auto r = convex_hull_extremes(pts);
  EXPECT_EQ(r.vertices(), (std::vector<Point>{{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_EQ(r.dimension(), 2);
}

TEST(Hull, TwoPointsIsSegment) {
  std::vector<Point> pts{{1, 1}, {0, 0}};
  auto r = convex_hull_extremes(pts);
  EXPECT_EQ(r.dimension(), 1);
  EXPECT_EQ(r.vertices(), (std::vector<Point>{{0, 0}, {1, 1}}));
}

TEST(Hull, CollinearRunKeepsEndpoints) {
  std::vector<Point> pts{{2, 2}, {0, 0}, {1, 1}, {3, 3}};
  auto r = convex_hull_extremes(pts);
  EXPECT_EQ(r.vertices(), (std::vector<Point>{{0, 0}, {3, 3}}));
}

TEST(Hull, Errors) {
  std::vector<Point> none;
  EXPECT_THROW(convex_hull_extremes(none), std::invalid_argument);
  std::vector<Point> dup{{0, 0}, {1, 0}, {0, 0}};
  EXPECT_THROW(convex_hull_extremes(dup), std::invalid_argument);
}

TEST(Hull, MatchesExtremalityOracle) {
  oracle::RandomPoints rnd(7);
  for (int t = 0; t < 300; ++t) {
    std::vector<Point> pts;
    std::size_t k = 1 + rnd.below(8);
    while (pts.size() < k) {
      Point p = t % 2 ? rnd.point() : rnd.grid_point(-3, 3);
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    auto r = convex_hull_extremes(pts);
    EXPECT_EQ(oracle::sorted_vertices(r), oracle::extreme_points(pts));
    EXPECT_TRUE(oracle::is_canonical(r));
  }
}

TEST(Hull, Idempotent) {
  oracle::RandomPoints rnd(8);
  for (int t = 0; t < 200; ++t) {
    auto r = random_region(rnd);
    EXPECT_EQ(convex_hull_extremes(r.vertices()), r);
  }
}

TEST(PointInRegion, Triangle) {
  auto tri = R({{0, 0}, {3, 0}, {0, 3}});
  EXPECT_EQ(point_in_region({1, 1}, tri), Location::interior);
  EXPECT_EQ(point_in_region({0, 0}, tri), Location::boundary);
  EXPECT_EQ(point_in_region({5, 5}, tri), Location::outside);
  EXPECT_EQ(point_in_region({1, 0}, tri), Location::boundary);
}

TEST(PointInRegion, Degenerate) {
  auto seg = R({{0, 0}, {2, 2}});
  EXPECT_EQ(point_in_region({1, 1}, seg), Location::boundary);
  EXPECT_EQ(point_in_region({3, 3}, seg), Location::outside);
  auto pt = R({{1, 2}});
  EXPECT_EQ(point_in_region({1, 2}, pt), Location::boundary);
  EXPECT_EQ(point_in_region({2, 1}, pt), Location::outside);
  EXPECT_THROW(point_in_region({0, 0}, ConvexRegion{}), std::invalid_argument);
}

TEST(Intersect, CrossingDiagonals) {
  auto r = intersect_regions(R({{0, 0}, {2, 2}}), R({{0, 2}, {2, 0}}));
  EXPECT_EQ(r.dimension(), 0);
  EXPECT_EQ(r.vertices()[0], Point(1, 1));
}

TEST(Intersect, VertexSharingTriangles) {
  auto r = intersect_regions(R({{0, 0}, {4, 0}, {0, 4}}), R({{0, 0}, {-4, 0}, {0, -4}}));
  EXPECT_EQ(r, R({{0, 0}}));
}

TEST(Intersect, DegenerateCases) {
  EXPECT_TRUE(intersect_regions(R({{0, 0}, {1, 0}}), R({{0, 2}, {1, 2}})).empty());
  EXPECT_EQ(intersect_regions(R({{0, 0}, {4, 0}}), R({{2, 0}, {6, 0}})), R({{2, 0}, {4, 0}}));
  EXPECT_EQ(intersect_regions(R({{0, 0}, {4, 0}, {0, 4}}), R({{1, 1}})), R({{1, 1}}));
  EXPECT_EQ(intersect_regions(R({{0, 0}, {4, 0}, {0, 4}}), R({{-1, 1}, {5, 1}})), R({{0, 1}, {3, 1}}));
  EXPECT_TRUE(intersect_regions(ConvexRegion{}, R({{0, 0}})).empty());
  EXPECT_EQ(intersect_regions(R({{0, 0}, {4, 0}, {4, 4}, {0, 4}}), R({{2, 2}, {6, 2}, {6, 6}, {2, 6}})),
            R({{2, 2}, {4, 2}, {4, 4}, {2, 4}}));
}

TEST(Intersect, MatchesVertexCrossingOracle) {
  oracle::RandomPoints rnd(2024);
  for (int t = 0; t < 200; ++t) {
    auto a = random_region(rnd), b = random_region(rnd);
    auto got = intersect_regions(a, b);
    EXPECT_EQ(oracle::sorted_vertices(got), oracle::intersection_vertices(a, b))
        << to_string(a) << " & " << to_string(b);
    EXPECT_TRUE(oracle::is_canonical(got));
  }
}

TEST(Intersect, CommutativeAndMonotone) {
  oracle::RandomPoints rnd(99);
  for (int t = 0; t < 300; ++t) {
    auto a = random_region(rnd), b = random_region(rnd);
    auto ab = intersect_regions(a, b);
    EXPECT_EQ(ab, intersect_regions(b, a));
    EXPECT_LE(region_dimension(ab), std::min(region_dimension(a), region_dimension(b)));
  }
}

TEST(RegionDimension, Values) {
  EXPECT_EQ(region_dimension(ConvexRegion{}), -1);
  EXPECT_EQ(region_dimension(R({{3, 3}})), 0);
  EXPECT_EQ(region_dimension(R({{0, 0}, {1, 0}, {0, 1}})), 2);
}

TEST(LeftOfVector, Examples) {
  EXPECT_TRUE(left_of_vector({0, 0}, {1, 0}, {0, 1}));
  EXPECT_TRUE(left_of_vector({0, 0}, {1, 0}, {-1, 0}));
  EXPECT_FALSE(left_of_vector({0, 0}, {1, 0}, {2, 0}));
  EXPECT_FALSE(left_of_vector({0, 0}, {1, 0}, {0, -1}));
  EXPECT_THROW(left_of_vector({0, 0}, {0, 0}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(left_of_vector({0, 0}, {1, 1}, {0, 0}), std::invalid_argument);
}

TEST(LeftOfVector, Trichotomy) {
  oracle::RandomPoints rnd(5);
  for (int t = 0; t < 500; ++t) {
    Point p = rnd.point(), a = rnd.point(), b = rnd.point();
    if (p == a || p == b || a == b || orientation(p, a, b) == 0) continue;
    EXPECT_NE(left_of_vector(p, a, b), left_of_vector(p, b, a));
  }
  // opposite rays: 180 degrees both ways
  EXPECT_TRUE(left_of_vector({1, 1}, {3, 2}, {-1, 0}));
  EXPECT_TRUE(left_of_vector({1, 1}, {-1, 0}, {3, 2}));
}

TEST(SameRay, Basic) {
  EXPECT_TRUE(same_ray({0, 0}, {1, 1}, {3, 3}));
  EXPECT_FALSE(same_ray({0, 0}, {1, 1}, {-1, -1}));
  EXPECT_FALSE(same_ray({0, 0}, {1, 1}, {1, 2}));
}
