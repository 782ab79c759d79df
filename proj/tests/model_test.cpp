#include "phicov/model.hpp"
#include "phicov/phi.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace phicov;
using phicov::testing::path;

namespace {

bool has_rule(const std::vector<Violation>& v, Rule r) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == r && !x.warning; });
}

}  // namespace

TEST(Parse, Examples) {
  const Instance a = parse_instance(R"({"trees":[{"vertices":[[0,0],[1,0]],"edges":[[0,1]]}]})");
  EXPECT_EQ(a.m(), 1u);
  EXPECT_EQ(a.n(), 2u);
  EXPECT_THROW(parse_instance(R"({"trees":[]})"), ParseError);
  const Instance s = parse_instance(R"({"trees":[{"vertices":[[0,0]],"edges":[]}]})");
  EXPECT_EQ(s.m(), 1u);
  EXPECT_EQ(s.n(), 1u);
  EXPECT_TRUE(validate_instance(s).empty());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_instance(R"({"trees":[{"vertices":[[0,0],[1,0]],"edges":[[0,1]]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"trees":[{"vertices":[[0,0.5]],"edges":[]}]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"trees":[{"vertices":[[0,2000000000]],"edges":[]}]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"trees":[{"vertices":[[0,0],[1,0]],"edges":[[0,2]]}]})"), ParseError);
  EXPECT_THROW(parse_instance(R"({"forest":[]})"), ParseError);
  try {
    parse_instance("{\"trees\":\n  [oops]}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(Parse, Scaled) {
  const Instance a = parse_instance_scaled(R"({"trees":[{"vertices":[[0.5,1.25]],"edges":[]}]})", 4);
  EXPECT_EQ(a.trees[0].vertices[0], (Point{2, 5}));
  EXPECT_THROW(parse_instance_scaled(R"({"trees":[{"vertices":[[0.3,0]],"edges":[]}]})", 2), ParseError);
}

TEST(Parse, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = phicov::testing::random_instance(seed);
    const std::string text = serialize_instance(inst);
    EXPECT_EQ(parse_instance(text), inst);
    EXPECT_EQ(serialize_instance(parse_instance(text)), text);
  }
}

TEST(Parse, Stats) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = phicov::testing::random_instance(seed);
    std::size_t n = 0;
    for (const auto& t : inst.trees) n += t.vertices.size();
    EXPECT_EQ(inst.n(), n);
  }
}

TEST(Validate, Examples) {
  const Instance crossing{{path({{0, 0}, {2, 2}}), path({{0, 2}, {2, 0}})}};
  const auto v = validate_instance(crossing);
  ASSERT_TRUE(has_rule(v, Rule::trees_cross));
  EXPECT_NE(v.front().message.find("cross at (1,1)"), std::string::npos) << v.front().message;

  GeometricTree split;
  split.vertices = {{0, 0}, {1, 0}, {5, 5}, {6, 5}};
  split.edges = {{0, 1}, {2, 3}};
  const auto w = validate_instance({{split}});
  EXPECT_TRUE(has_rule(w, Rule::not_connected));
  EXPECT_TRUE(has_rule(w, Rule::edge_count));

  EXPECT_FALSE(has_errors(validate_instance(phicov::testing::instance_d())));
}

TEST(Validate, Rules) {
  EXPECT_TRUE(has_rule(validate_instance({{path({{0, 0}, {4, 0}}), phicov::testing::single({2, 0})}}), Rule::vertex_on_edge));
  EXPECT_TRUE(has_rule(validate_instance({{path({{0, 0}, {4, 0}}), path({{4, 0}, {5, 5}})}}), Rule::shared_vertex));
  EXPECT_TRUE(has_rule(validate_instance({{path({{0, 0}, {4, 0}, {4, 4}, {2, -2}})}}), Rule::self_crossing));
  EXPECT_TRUE(has_rule(validate_instance({{path({{0, 0}, {4, 0}, {0, 0}})}}), Rule::duplicate_vertex));

  GeometricTree loop;
  loop.vertices = {{0, 0}, {1, 0}};
  loop.edges = {{0, 0}};
  EXPECT_TRUE(has_rule(validate_instance({{loop}}), Rule::self_loop));
  loop.edges = {{0, 1}, {1, 0}};
  EXPECT_TRUE(has_rule(validate_instance({{loop}}), Rule::duplicate_edge));
  loop.edges = {{0, 7}};
  EXPECT_TRUE(has_rule(validate_instance({{loop}}), Rule::bad_edge_index));

  // Shared coordinates only warn.
  const auto w = validate_instance({{path({{0, 0}, {1, 3}}), path({{0, 5}, {2, 6}})}});
  ASSERT_FALSE(w.empty());
  EXPECT_FALSE(has_errors(w));
  EXPECT_EQ(w.front().rule, Rule::shared_coordinate);
}

TEST(Validate, BruteForceAgreesOnRandomSegments) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(0, 12);
  for (int it = 0; it < 2000; ++it) {
    const Segment s{{c(rng), c(rng)}, {c(rng), c(rng)}};
    const Segment t{{c(rng), c(rng)}, {c(rng), c(rng)}};
    if (s.a == s.b || t.a == t.b) continue;
    std::set<Point> ends{s.a, s.b, t.a, t.b};
    if (ends.size() < 4) continue;
    // Two segment trees are invalid together iff they share a point.
    const std::vector<Point> sp{s.a, s.b}, tp{t.a, t.b};
    const bool meet = !phicov::testing::brute_boundary_points(convex_hull(sp), convex_hull(tp)).empty();
    const bool invalid = has_errors(validate_instance({{path({s.a, s.b}), path({t.a, t.b})}}));
    EXPECT_EQ(invalid, meet);
  }
}

class GeneratorKinds : public ::testing::TestWithParam<GenKind> {};

TEST_P(GeneratorKinds, ValidForManySeeds) {
  const GenKind kind = GetParam();
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenParams p;
    p.trees = std::uniform_int_distribution<int>(1, kind == GenKind::nested ? 8 : 12)(rng);
    p.vertices_per_tree = std::uniform_int_distribution<int>(1, 12)(rng);
    const Instance inst = generate(kind, p, seed);
    const auto v = validate_instance(inst);
    ASSERT_FALSE(has_errors(v)) << gen_kind_name(kind) << " seed " << seed << ": " << v.front().message;
    if (kind != GenKind::mincircle_gadget) {
      EXPECT_EQ(inst.m(), static_cast<std::size_t>(p.trees));
    }
    ASSERT_EQ(generate(kind, p, seed), inst);
  }
}

INSTANTIATE_TEST_SUITE_P(AllKinds, GeneratorKinds,
                         ::testing::Values(GenKind::strips, GenKind::combs, GenKind::nested, GenKind::mincircle_gadget,
                                           GenKind::scatter),
                         [](const auto& info) {
                           std::string s = gen_kind_name(info.param);
                           std::replace(s.begin(), s.end(), '-', '_');
                           return s;
                         });

TEST(Generate, Examples) {
  GenParams p;
  p.trees = 3;
  const Instance strips = generate(GenKind::strips, p, 1);
  EXPECT_EQ(strips.m(), 3u);
  EXPECT_EQ(naive_phi_cover(strips, PhiFunction(PhiKind::hull), MergePolicy::first_found()).cover.regions.size(), 3u);

  p.trees = 1;
  const Instance one = generate(GenKind::nested, p, 0);
  EXPECT_EQ(naive_phi_cover(one, PhiFunction(PhiKind::hull), MergePolicy::first_found()).cover.regions.size(), 1u);

  p.trees = 5;
  const Instance five = generate(GenKind::nested, p, 1);
  EXPECT_EQ(naive_phi_cover(five, PhiFunction(PhiKind::hull), MergePolicy::first_found()).cover.regions.size(), 1u);

  EXPECT_EQ(generate(GenKind::mincircle_gadget, p, 0).m(), 4u);
}

TEST(Generate, Infeasible) {
  GenParams p;
  p.trees = 0;
  EXPECT_THROW(generate(GenKind::strips, p, 0), InfeasibleParams);
  p.trees = 2;
  p.vertices_per_tree = 0;
  EXPECT_THROW(generate(GenKind::combs, p, 0), InfeasibleParams);
  EXPECT_THROW(parse_gen_kind("spirals"), std::invalid_argument);
}

TEST(Cover, CanonicalEquality) {
  Cover a;
  a.regions = {AABB{0, 0, 1, 1}, AABB{5, 5, 6, 6}};
  a.membership = {{1}, {0, 2}};
  Cover b;
  b.regions = {AABB{5, 5, 6, 6}, AABB{0, 0, 1, 1}};
  b.membership = {{2, 0}, {1}};
  EXPECT_TRUE(covers_equal(a, b));
  b.membership = {{2}, {0, 1}};
  EXPECT_FALSE(covers_equal(a, b));
}

TEST(Cover, JsonRoundTrip) {
  Cover c;
  c.regions = {convex_hull(std::vector<Point>{{0, 0}, {4, 0}, {2, 3}}), AABB{-1, -2, 3, 4}, Circle{0.5, -1.25, 2.0}};
  c.membership = {{0}, {1, 3}, {2}};
  const std::vector<ShotRecord> rays{{{0, 0}, RationalPoint(3, 1, 2), true}};
  const CoverDocument d = parse_cover(serialize_cover(c, "hull", rays));
  EXPECT_EQ(d.phi, "hull");
  EXPECT_TRUE(covers_equal(d.cover, c));
  ASSERT_EQ(d.rays.size(), 1u);
  EXPECT_EQ(d.rays[0].end, RationalPoint(3, 1, 2));
  EXPECT_TRUE(d.rays[0].merged);
}
