// Shared fixtures and brute-force reference implementations for the tests.
#pragma once

#include "phicov/model.hpp"

#include <cstdint>
#include <vector>

namespace phicov::testing {

GeometricTree path(std::vector<Point> pts);
GeometricTree single(Point p);

// Square path (0,0),(10,0),(10,10),(0,10) plus the point (5,5).
Instance instance_a();
// Two far apart segments.
Instance instance_b();
// instance_a plus the segment (-2,5)-(2,5) entering through the open side.
Instance instance_d();
// Two overlapping boxes and a far one.
Instance instance_e();

// Hull by exhaustive edge test: (a,b) is a hull edge iff no point lies
// strictly right of a->b and none lies on the line beyond the segment.
std::vector<Point> brute_hull(std::vector<Point> pts);

// All points on both boundaries, by testing every edge pair.
std::vector<RationalPoint> brute_boundary_points(const ConvexPolygon& p, const ConvexPolygon& q);

// Containment-maximal polygons by testing every pair with polygon_contains.
std::vector<int> brute_maximal(const std::vector<ConvexPolygon>& polys);

// Mixed random instances (strips, combs, nested, scatter) with n <= max_n.
Instance random_instance(std::uint64_t seed, int max_n = 200);

// Same trees in a different order; perm[i] is the new position of tree i.
Instance permuted(const Instance& inst, const std::vector<int>& perm);

}  // namespace phicov::testing
