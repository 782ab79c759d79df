#include "phicov/geom.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace phicov {
namespace {

using testing::brute_boundary_points;
using testing::brute_hull;

ConvexPolygon square(std::int64_t x, std::int64_t y, std::int64_t s) {
  return ConvexPolygon({{x, y}, {x + s, y}, {x + s, y + s}, {x, y + s}});
}

std::vector<Point> random_points(std::mt19937_64& rng, int count, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> c(-range, range);
  std::vector<Point> pts(static_cast<std::size_t>(count));
  for (Point& p : pts) p = {c(rng), c(rng)};
  return pts;
}

TEST(Orient, Examples) {
  EXPECT_EQ(orient({0, 0}, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {2, 0}), 0);
  EXPECT_EQ(orient({0, 0}, {1, 0}, {1, -1}), -1);
}

TEST(Orient, ExtremeCoordinatesDoNotOverflow) {
  const std::int64_t L = kCoordLimit;
  EXPECT_EQ(orient({-L, -L}, {L, L}, {L, L - 1}), -1);
  EXPECT_EQ(orient({-L, -L}, {L, L}, {-L + 1, -L + 1}), 0);
  EXPECT_EQ(orient({-L, L}, {L, -L}, {L, L}), 1);
}

TEST(Orient, AntisymmetricAndTranslationInvariant) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> shift(-1000, 1000);
  for (int i = 0; i < 2000; ++i) {
    const auto p = random_points(rng, 3, 50);
    EXPECT_EQ(orient(p[0], p[1], p[2]), -orient(p[0], p[2], p[1]));
    const Point d{shift(rng), shift(rng)};
    auto t = [&](const Point& q) { return Point{q.x + d.x, q.y + d.y}; };
    EXPECT_EQ(orient(p[0], p[1], p[2]), orient(t(p[0]), t(p[1]), t(p[2])));
  }
}

TEST(Segments, Examples) {
  EXPECT_EQ(segments_intersect({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}), SegmentContact::crossing);
  EXPECT_EQ(*segment_intersection_point({{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}), RationalPoint(Point{1, 1}));
  EXPECT_EQ(segments_intersect({{0, 0}, {1, 0}}, {{1, 0}, {2, 1}}), SegmentContact::touching);
  EXPECT_EQ(segments_intersect({{0, 0}, {1, 0}}, {{0, 2}, {1, 2}}), SegmentContact::disjoint);
}

TEST(Segments, DegenerateAndCollinearCases) {
  EXPECT_EQ(segments_intersect({{0, 0}, {4, 0}}, {{2, 0}, {6, 0}}), SegmentContact::crossing);
  EXPECT_EQ(segments_intersect({{0, 0}, {4, 0}}, {{4, 0}, {6, 0}}), SegmentContact::touching);
  EXPECT_EQ(segments_intersect({{0, 0}, {4, 0}}, {{5, 0}, {6, 0}}), SegmentContact::disjoint);
  EXPECT_EQ(segments_intersect({{0, 0}, {4, 0}}, {{2, 0}, {2, 0}}), SegmentContact::touching);
  EXPECT_EQ(segments_intersect({{0, 0}, {4, 0}}, {{2, 1}, {2, 1}}), SegmentContact::disjoint);
  EXPECT_EQ(segments_intersect({{0, 0}, {4, 0}}, {{2, 0}, {2, 3}}), SegmentContact::touching);
  EXPECT_EQ(*segment_intersection_point({{0, 0}, {3, 0}}, {{1, -1}, {2, 1}}), RationalPoint(3, 0, 2));
}

TEST(ConvexHull, Examples) {
  // Reference from the exhaustive edge test, frozen.
  const std::vector<Point> pts{{0, 0}, {4, 0}, {2, 3}, {2, 1}};
  ASSERT_EQ(brute_hull(pts), (std::vector<Point>{{0, 0}, {4, 0}, {2, 3}}));
  EXPECT_EQ(convex_hull(pts).vertices(), (std::vector<Point>{{0, 0}, {4, 0}, {2, 3}}));

  const ConvexPolygon seg = convex_hull(std::vector<Point>{{0, 0}, {1, 1}});
  EXPECT_TRUE(seg.is_segment());
  EXPECT_EQ(seg.vertices(), (std::vector<Point>{{0, 0}, {1, 1}}));
  EXPECT_EQ(seg.edges().size(), 2u);

  const ConvexPolygon pt = convex_hull(std::vector<Point>{{5, 5}});
  EXPECT_TRUE(pt.is_point());
  EXPECT_TRUE(pt.edges().empty());
}

TEST(ConvexHull, CollapsesCollinearAndDuplicates) {
  const std::vector<Point> pts{{0, 0}, {1, 0}, {2, 0}, {2, 0}, {1, 0}};
  EXPECT_EQ(convex_hull(pts).vertices(), (std::vector<Point>{{0, 0}, {2, 0}}));
  const std::vector<Point> sq{{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}, {0, 5}};
  EXPECT_EQ(convex_hull(sq).vertices(), (std::vector<Point>{{0, 0}, {10, 0}, {10, 10}, {0, 10}}));
}

TEST(ConvexHull, MatchesBruteForceAndContainsInputs) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const auto pts = random_points(rng, 1 + i % 15, i % 2 ? 5 : 1000);
    const ConvexPolygon h = convex_hull(pts);
    EXPECT_EQ(h.vertices(), brute_hull(pts));
    for (const Point& p : pts) EXPECT_NE(point_in_convex_polygon(p, h), Location::outside);
  }
}

TEST(ConvexPolygon, ValidatesAndCanonicalises) {
  const ConvexPolygon p({{10, 10}, {0, 10}, {0, 0}, {10, 0}});
  EXPECT_EQ(p.vertices(), (std::vector<Point>{{0, 0}, {10, 0}, {10, 10}, {0, 10}}));
  EXPECT_THROW(ConvexPolygon({{0, 0}, {0, 10}, {10, 10}, {10, 0}}), std::invalid_argument);  // clockwise
  EXPECT_THROW(ConvexPolygon({{0, 0}, {5, 0}, {10, 0}, {10, 10}}), std::invalid_argument);   // collinear turn
  EXPECT_THROW(ConvexPolygon({{0, 0}, {10, 0}, {5, 1}, {10, 10}}), std::invalid_argument);   // reflex
}

TEST(PointInPolygon, Examples) {
  const ConvexPolygon sq = square(0, 0, 10);
  EXPECT_EQ(point_in_convex_polygon(Point{5, 5}, sq), Location::inside);
  EXPECT_EQ(point_in_convex_polygon(Point{10, 5}, sq), Location::boundary);
  EXPECT_EQ(point_in_convex_polygon(Point{11, 5}, sq), Location::outside);
  EXPECT_EQ(point_in_convex_polygon(RationalPoint(19, 19, 2), sq), Location::inside);
  EXPECT_EQ(point_in_convex_polygon(RationalPoint(20, 3, 2), sq), Location::boundary);
  EXPECT_EQ(point_in_convex_polygon(RationalPoint(21, 3, 2), sq), Location::outside);
}

TEST(PointInPolygon, Degenerate) {
  const ConvexPolygon seg = convex_hull(std::vector<Point>{{0, 0}, {4, 2}});
  EXPECT_EQ(point_in_convex_polygon(Point{2, 1}, seg), Location::boundary);
  EXPECT_EQ(point_in_convex_polygon(Point{6, 3}, seg), Location::outside);
  EXPECT_EQ(point_in_convex_polygon(Point{2, 2}, seg), Location::outside);
  const ConvexPolygon pt = convex_hull(std::vector<Point>{{3, 3}});
  EXPECT_EQ(point_in_convex_polygon(Point{3, 3}, pt), Location::boundary);
  EXPECT_EQ(point_in_convex_polygon(Point{3, 4}, pt), Location::outside);
}

TEST(BoundaryIntersection, Examples) {
  const ConvexPolygon p = square(0, 0, 4), q = square(2, 2, 4);
  const std::vector<RationalPoint> expected{Point{2, 4}, Point{4, 2}};
  ASSERT_EQ(brute_boundary_points(p, q), expected);
  EXPECT_EQ(boundary_intersection_points(p, q).points, expected);
  EXPECT_TRUE(boundary_intersection_points(square(0, 0, 1), square(5, 5, 1)).points.empty());
  EXPECT_TRUE(boundary_intersection_points(square(0, 0, 10), square(3, 3, 2)).points.empty());
}

TEST(BoundaryIntersection, OverlapReportsEndpoints) {
  const BoundaryContact c = boundary_intersection_points(square(0, 0, 4), square(4, 1, 2));
  EXPECT_TRUE(c.overlap);
  EXPECT_EQ(c.points, (std::vector<RationalPoint>{Point{4, 1}, Point{4, 3}}));
}

TEST(BoundaryIntersection, MatchesBruteForceWithoutOverlap) {
  std::mt19937_64 rng(3);
  int compared = 0;
  for (int i = 0; i < 600; ++i) {
    const ConvexPolygon p = convex_hull(random_points(rng, 1 + i % 8, 20));
    const ConvexPolygon q = convex_hull(random_points(rng, 1 + i % 6, 20));
    const BoundaryContact c = boundary_intersection_points(p, q);
    if (c.overlap) continue;
    EXPECT_EQ(c.points, brute_boundary_points(p, q));
    ++compared;
  }
  EXPECT_GT(compared, 400);
}

TEST(MergeHulls, Examples) {
  // Reference hulls from the exhaustive edge test, frozen.
  const std::vector<Point> eight{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {6, 2}, {6, 6}, {2, 6}};
  const std::vector<Point> expected{{0, 0}, {4, 0}, {6, 2}, {6, 6}, {2, 6}, {0, 4}};
  ASSERT_EQ(brute_hull(eight), expected);
  EXPECT_EQ(merge_convex_hulls(square(0, 0, 4), square(2, 2, 4)).vertices(), expected);

  EXPECT_EQ(merge_convex_hulls(square(0, 0, 10), convex_hull(std::vector<Point>{{5, 5}})), square(0, 0, 10));

  const std::vector<Point> segs{{0, 0}, {1, 0}, {0, 2}, {1, 3}};
  const std::vector<Point> quad{{0, 0}, {1, 0}, {1, 3}, {0, 2}};
  ASSERT_EQ(brute_hull(segs), quad);
  EXPECT_EQ(merge_convex_hulls(convex_hull(std::vector<Point>{{0, 0}, {1, 0}}), convex_hull(std::vector<Point>{{0, 2}, {1, 3}}))
                .vertices(),
            quad);
}

TEST(MergeHulls, EqualsHullOfUnion) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_points(rng, 1 + i % 12, 30);
    const auto b = random_points(rng, 1 + (i / 12) % 12, 30);
    std::vector<Point> all = a;
    all.insert(all.end(), b.begin(), b.end());
    EXPECT_EQ(merge_convex_hulls(convex_hull(a), convex_hull(b)), convex_hull(all));
  }
}

TEST(PolygonsIntersect, AgreesWithPointSampling) {
  // Closed convex sets meet iff a vertex of one lies in the other or two
  // boundary edges meet.
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1500; ++i) {
    const ConvexPolygon p = convex_hull(random_points(rng, 1 + i % 7, 12));
    const ConvexPolygon q = convex_hull(random_points(rng, 1 + (i / 7) % 7, 12));
    bool expected = !brute_boundary_points(p, q).empty();
    for (const Point& v : p.vertices()) expected = expected || point_in_convex_polygon(v, q) != Location::outside;
    for (const Point& v : q.vertices()) expected = expected || point_in_convex_polygon(v, p) != Location::outside;
    EXPECT_EQ(polygons_intersect(p, q), expected) << describe(p) << " vs " << describe(q);
  }
}

TEST(Boxes, Examples) {
  EXPECT_EQ(box_of(std::vector<Point>{{0, 0}, {4, 2}}), (AABB{0, 0, 4, 2}));
  EXPECT_TRUE(boxes_intersect({0, 0, 4, 2}, {3, -1, 5, 1}));
  EXPECT_EQ(box_union({0, 0, 4, 2}, {3, -1, 5, 1}), (AABB{0, -1, 5, 2}));
  EXPECT_TRUE(boxes_intersect({0, 0, 4, 2}, {4, 2, 5, 3}));  // corner touch
  EXPECT_FALSE(boxes_intersect({0, 0, 4, 2}, {5, 0, 6, 2}));
}

// Smallest circle over all diametral pairs and circumcircles that encloses
// every point.
Circle brute_mec(const std::vector<Point>& pts) {
  auto encloses = [&](const Circle& c) {
    return std::all_of(pts.begin(), pts.end(), [&](const Point& p) {
      return std::hypot(p.x - c.cx, p.y - c.cy) <= c.r * (1 + 1e-12) + 1e-9;
    });
  };
  Circle best{static_cast<double>(pts[0].x), static_cast<double>(pts[0].y), 0.0};
  if (encloses(best)) return best;
  best.r = INFINITY;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double ax = pts[i].x, ay = pts[i].y, bx = pts[j].x, by = pts[j].y;
      const Circle c{(ax + bx) / 2, (ay + by) / 2, std::hypot(ax - bx, ay - by) / 2};
      if (c.r < best.r && encloses(c)) best = c;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const double cx = pts[k].x, cy = pts[k].y;
        const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        if (d == 0) continue;
        const double a2 = ax * ax + ay * ay, b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
        const double ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
        const double uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
        const Circle cc{ux, uy, std::hypot(ax - ux, ay - uy)};
        if (cc.r < best.r && encloses(cc)) best = cc;
      }
    }
  }
  return best;
}

TEST(MinEnclosingCircle, Examples) {
  const Circle a = min_enclosing_circle(std::vector<Point>{{0, 0}, {2, 0}});
  EXPECT_NEAR(a.cx, 1.0, 1e-12);
  EXPECT_NEAR(a.cy, 0.0, 1e-12);
  EXPECT_NEAR(a.r, 1.0, 1e-12);

  const std::vector<Point> tri{{0, 0}, {2, 0}, {1, 2}};
  const Circle ref = brute_mec(tri);
  ASSERT_NEAR(ref.cx, 1.0, 1e-12);
  ASSERT_NEAR(ref.cy, 0.75, 1e-12);
  ASSERT_NEAR(ref.r, 1.25, 1e-12);
  const Circle b = min_enclosing_circle(tri);
  EXPECT_NEAR(b.cx, 1.0, 1e-9);
  EXPECT_NEAR(b.cy, 0.75, 1e-9);
  EXPECT_NEAR(b.r, 1.25, 1e-9);

  const Circle c = min_enclosing_circle(std::vector<Point>{{3, 3}});
  EXPECT_EQ(c.cx, 3.0);
  EXPECT_EQ(c.cy, 3.0);
  EXPECT_EQ(c.r, 0.0);
}

TEST(MinEnclosingCircle, MatchesBruteForce) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const auto pts = random_points(rng, 1 + i % 9, 40);
    const Circle ref = brute_mec(pts);
    const Circle got = min_enclosing_circle(pts);
    EXPECT_NEAR(got.r, ref.r, 1e-7);
    for (const Point& p : pts) EXPECT_TRUE(circle_contains(got, static_cast<double>(p.x), static_cast<double>(p.y)));
  }
}

TEST(MinEnclosingCircle, IntersectionTolerance) {
  EXPECT_TRUE(circles_intersect({0, 0, 1}, {2, 0, 1}));
  EXPECT_TRUE(circles_intersect({0, 0, 1}, {2 + 1e-10, 0, 1}));
  EXPECT_FALSE(circles_intersect({0, 0, 1}, {2.001, 0, 1}));
}

TEST(MinEnclosingCircle, PropertyTwoFails) {
  // B = {(1,0),(-1,0)} has the unit circle; A = {(0,1),(1,0)} lies in it,
  // yet its circle reaches sqrt(2) from the origin.
  const Circle b = min_enclosing_circle(std::vector<Point>{{1, 0}, {-1, 0}});
  const Circle a = min_enclosing_circle(std::vector<Point>{{0, 1}, {1, 0}});
  EXPECT_TRUE(circle_contains(b, 0, 1));
  EXPECT_TRUE(circle_contains(b, 1, 0));
  const double reach = std::hypot(a.cx - b.cx, a.cy - b.cy) + a.r;
  EXPECT_NEAR(reach, std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(b.r, 1.0, 1e-12);
  EXPECT_GT(reach, b.r + 1e-9);
}

TEST(VerticalSide, SquareAndSegment) {
  const ConvexPolygon sq = square(0, 0, 10);
  EXPECT_EQ(vertical_side(sq, {5, -1}), -1);
  EXPECT_EQ(vertical_side(sq, {5, 11}), 1);
  EXPECT_EQ(vertical_side(sq, {5, 5}), 0);
  EXPECT_EQ(vertical_side(sq, {0, 10}), 0);
  EXPECT_EQ(vertical_side(sq, {10, 12}), 1);
  const ConvexPolygon seg = convex_hull(std::vector<Point>{{0, 0}, {10, 5}});
  EXPECT_EQ(vertical_side(seg, {4, 1}), -1);
  EXPECT_EQ(vertical_side(seg, {4, 3}), 1);
  EXPECT_EQ(vertical_side(seg, {4, 2}), 0);
}

}  // namespace
}  // namespace phicov
