#include <gtest/gtest.h>

#include <algorithm>

#include "cht/constructions.hpp"
#include "cht/verify.hpp"

using namespace cht;

namespace {

std::size_t expected_m(ConstructionName c, std::size_t n) {
  switch (c) {
    case ConstructionName::counterexample: return n + 1;
    case ConstructionName::odd_circle:
    case ConstructionName::star_neighbors: return n;
    case ConstructionName::gossett: return 3 * (n - 1) / 2;
    case ConstructionName::triple_blocks: return (n / 3) * (n / 3) * (n / 3);
    case ConstructionName::double_star: return 2 * n - 2;
    case ConstructionName::parabola_points: return 0;
  }
  return 0;
}

}  // namespace

TEST(Names, RoundTrip) {
  for (auto c : all_construction_names()) EXPECT_EQ(parse_construction_name(to_string(c)), c);
  EXPECT_FALSE(parse_construction_name("nope").has_value());
  EXPECT_EQ(all_construction_names().size(), 7u);
}

TEST(Parabola, Points) {
  auto P = parabola_points(3);
  EXPECT_EQ(P[0], Point(0, 0));
  EXPECT_EQ(P[1], Point(1, 1));
  EXPECT_EQ(P[2], Point(2, 4));
  for (std::size_t n = 1; n <= 12; ++n) {
    EXPECT_TRUE(check_general_position(parabola_points(n)).empty());
    EXPECT_TRUE(in_convex_position(parabola_points(n)));
  }
  EXPECT_THROW(generate(ConstructionName::parabola_points, 0), std::invalid_argument);
}

TEST(Generators, CountsAndValidityUpTo20) {
  for (auto c : all_construction_names()) {
    for (std::size_t n = 0; n <= 20; ++n) {
      if (!accepts(c, n)) {
        EXPECT_THROW(generate(c, n), std::invalid_argument) << to_string(c) << " " << n;
        continue;
      }
      if (c == ConstructionName::triple_blocks && n > 12) continue;  // (n/3)^3 gets slow to verify
      auto inst = generate(c, n);
      EXPECT_EQ(inst.n(), n);
      EXPECT_EQ(inst.m(), expected_m(c, n)) << to_string(c) << " " << n;
      EXPECT_TRUE(std::is_sorted(inst.family.begin(), inst.family.end()));
      if (c != ConstructionName::parabola_points) {
        EXPECT_TRUE(verify(inst).valid) << to_string(c) << " " << n;
      }
    }
  }
}

TEST(Generators, Ranges) {
  EXPECT_FALSE(accepts(ConstructionName::counterexample, 5));
  EXPECT_TRUE(accepts(ConstructionName::counterexample, 6));
  EXPECT_FALSE(accepts(ConstructionName::odd_circle, 6));
  EXPECT_FALSE(accepts(ConstructionName::odd_circle, 1));
  EXPECT_TRUE(accepts(ConstructionName::odd_circle, 3));
  EXPECT_FALSE(accepts(ConstructionName::star_neighbors, 2));
  EXPECT_FALSE(accepts(ConstructionName::gossett, 2));
  EXPECT_FALSE(accepts(ConstructionName::triple_blocks, 10));
  EXPECT_TRUE(accepts(ConstructionName::triple_blocks, 3));
  EXPECT_FALSE(accepts(ConstructionName::double_star, 1));
  EXPECT_TRUE(accepts(ConstructionName::double_star, 2));
}

TEST(Counterexample, Structure) {
  auto inst = gen_counterexample(6);
  const Index p = 0, pp = 1, q = 2, qp = 3;
  EXPECT_EQ(point_in_region(inst.points[qp],
                            ConvexRegion::hull_of({inst.points[p], inst.points[pp], inst.points[q]})),
            Location::interior);
  int at_qp = 0, through_ppp = 0;
  for (const auto& h : inst.family) {
    if (h.size() == 3 && h.contains(qp)) ++at_qp;
    if (h.contains(p) && h.contains(pp)) ++through_ppp;
  }
  EXPECT_EQ(at_qp, 5);
  EXPECT_EQ(through_ppp, 2);
  EXPECT_TRUE(check_general_position(inst.points).empty());
}

TEST(Counterexample, RsConvexWithPAndPPrime) {
  for (std::size_t n = 6; n <= 20; ++n) {
    auto inst = gen_counterexample(n);
    std::vector<Point> arc{inst.points[0], inst.points[1]};
    for (Index i = 4; i < n; ++i) arc.push_back(inst.points[i]);
    EXPECT_EQ(ConvexRegion::hull_of(arc).vertices().size(), arc.size());
    EXPECT_FALSE(in_convex_position(inst.points));
  }
}

TEST(OddCircle, Small) {
  auto three = gen_odd_circle(3);
  EXPECT_EQ(three.m(), 3u);
  EXPECT_TRUE(verify(three).valid);
  auto seven = gen_odd_circle(7);
  EXPECT_TRUE(in_convex_position(seven.points));
  for (Index i = 0; i < seven.m(); ++i) {
    EXPECT_EQ(seven.family[i].size(), 2u);
    for (Index j = i + 1; j < seven.m(); ++j)
      EXPECT_EQ(pairwise_intersection_class(seven, i, j).dimension(), 0);
  }
}

TEST(StarNeighbors, Small) {
  for (std::size_t n : {3u, 4u}) {
    auto inst = gen_star_neighbors(n);
    EXPECT_EQ(inst.m(), n);
    EXPECT_TRUE(verify(inst).valid);
  }
}

TEST(Gossett, ContainmentNeeded) {
  auto inst = gen_gossett(7);
  EXPECT_EQ(inst.m(), 9u);
  EXPECT_TRUE(inst.flags.allow_containment);
  EXPECT_TRUE(verify(inst).valid);
  inst.flags = {};
  auto r = verify(inst);
  EXPECT_FALSE(r.valid);
  // three triangles, each covering two star segments
  EXPECT_EQ(r.condition1_violations.size(), 6u);
  for (const auto& v : r.condition1_violations) EXPECT_EQ(v.issue, PairIssue::containment);
  EXPECT_EQ(gen_gossett(3).m(), 3u);
}

TEST(TripleBlocks, Nine) {
  auto inst = gen_triple_blocks(9);
  EXPECT_EQ(inst.m(), 27u);
  EXPECT_TRUE(inst.flags.allow_triple_interior);
  auto r = verify(inst);
  EXPECT_TRUE(r.valid);
  inst.flags = {};
  r = verify(inst);
  EXPECT_TRUE(r.condition1_violations.empty());
  EXPECT_TRUE(r.condition2_violations.empty());
  EXPECT_FALSE(r.condition3_violations.empty());
  auto one = gen_triple_blocks(3);
  EXPECT_EQ(one.m(), 1u);
  for (int f = 0; f < 16; ++f) {
    one.flags = VariantFlags{bool(f & 1), bool(f & 2), bool(f & 4), bool(f & 8)};
    EXPECT_TRUE(verify(one).valid);
  }
}

TEST(DoubleStar, Multiset) {
  auto inst = gen_double_star(5);
  EXPECT_EQ(inst.m(), 8u);
  EXPECT_TRUE(inst.flags.allow_multiset);
  EXPECT_TRUE(inst.flags.allow_containment);
  EXPECT_TRUE(verify(inst).valid);
  inst.flags = {};
  auto r = verify(inst);
  EXPECT_EQ(r.condition1_violations.size(), 4u);
  for (const auto& v : r.condition1_violations) EXPECT_EQ(v.issue, PairIssue::duplicate);
  EXPECT_EQ(gen_double_star(2).m(), 2u);
}
