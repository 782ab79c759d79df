// 2D geometry kernel: integer points, exact predicates, convex polygons,
// axis-aligned boxes and (floating point) enclosing circles.
#pragma once

#include "phicov/exact.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace phicov {

// |x|, |y| <= kCoordLimit for every input coordinate.
inline constexpr std::int64_t kCoordLimit = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

inline bool in_coord_range(const Point& p) {
  return p.x >= -kCoordLimit && p.x <= kCoordLimit && p.y >= -kCoordLimit && p.y <= kCoordLimit;
}

std::string to_string(const Point& p);

// Point with rational coordinates (xn/den, yn/den), den > 0, fully reduced,
// so structural equality is value equality.
struct RationalPoint {
  i128 xn = 0;
  i128 yn = 0;
  i128 den = 1;

  RationalPoint() = default;
  RationalPoint(const Point& p) : xn(p.x), yn(p.y), den(1) {}  // NOLINT(google-explicit-constructor)
  RationalPoint(i128 x_num, i128 y_num, i128 denom);

  bool is_integral() const { return den == 1; }
  Point to_point() const { return {static_cast<std::int64_t>(xn), static_cast<std::int64_t>(yn)}; }
  double x() const;
  double y() const;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
  friend std::strong_ordering operator<=>(const RationalPoint& a, const RationalPoint& b);
};

std::string to_string(const RationalPoint& p);

struct Segment {
  Point a;
  Point b;

  friend bool operator==(const Segment&, const Segment&) = default;
};

// Counter-clockwise vertex list starting at the lexicographically smallest
// vertex, strictly convex at every vertex. One vertex is a point, two a
// segment.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  // Takes vertices in counter-clockwise order (any start). Throws
  // std::invalid_argument if they are not strictly convex.
  explicit ConvexPolygon(std::vector<Point> ccw);

  const std::vector<Point>& vertices() const { return v_; }
  std::size_t size() const { return v_.size(); }
  bool empty() const { return v_.empty(); }
  bool is_point() const { return v_.size() == 1; }
  bool is_segment() const { return v_.size() == 2; }
  const Point& operator[](std::size_t i) const { return v_[i]; }

  // Directed boundary edges: none for a point, both directions for a
  // segment, otherwise consecutive counter-clockwise pairs.
  std::vector<Segment> edges() const;

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;
  friend auto operator<=>(const ConvexPolygon& a, const ConvexPolygon& b) { return a.v_ <=> b.v_; }

 private:
  struct Trusted {};
  ConvexPolygon(std::vector<Point> canonical, Trusted) : v_(std::move(canonical)) {}
  friend ConvexPolygon convex_hull(std::span<const Point> points);

  std::vector<Point> v_;
};

struct AABB {
  std::int64_t xmin = 0;
  std::int64_t ymin = 0;
  std::int64_t xmax = 0;
  std::int64_t ymax = 0;

  friend auto operator<=>(const AABB&, const AABB&) = default;
};

std::string to_string(const AABB& b);

struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;

  friend bool operator==(const Circle&, const Circle&) = default;
};

// Default tolerance for circle predicates, applied to squared distances for
// point containment and to plain distances for circle-circle tests.
inline constexpr double kCircleEps = 1e-9;

// --- predicates -----------------------------------------------------------

// Sign of (b - a) x (c - a).
int orient(const Point& a, const Point& b, const Point& c);
int orient(const Point& a, const Point& b, const RationalPoint& c);

enum class SegmentContact { disjoint, touching, crossing };

// crossing: the closed segments share a point interior to both (collinear
// overlap included). touching: they meet only at an endpoint of at least
// one of them. Zero-length segments are allowed.
SegmentContact segments_intersect(const Segment& s, const Segment& t);

// One common point of two non-disjoint segments (for collinear overlap,
// the overlap endpoint nearest s.a). nullopt if disjoint.
std::optional<RationalPoint> segment_intersection_point(const Segment& s, const Segment& t);

// True if p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);
// True if p lies on s but is neither endpoint.
bool in_segment_interior(const Point& p, const Segment& s);

// --- convex polygons ------------------------------------------------------

// Andrew's monotone chain; collinear and duplicate points are dropped.
// Precondition: points non-empty.
ConvexPolygon convex_hull(std::span<const Point> points);

enum class Location { inside, boundary, outside };

Location point_in_convex_polygon(const Point& p, const ConvexPolygon& poly);
Location point_in_convex_polygon(const RationalPoint& p, const ConvexPolygon& poly);

struct BoundaryContact {
  std::vector<RationalPoint> points;  // sorted, deduplicated
  bool overlap = false;               // boundaries share a segment
};

// All points of dP ∩ dQ. Where the boundaries share a segment, only that
// segment's endpoints are reported and `overlap` is set.
BoundaryContact boundary_intersection_points(const ConvexPolygon& p, const ConvexPolygon& q);

// Conv(P ∪ Q).
ConvexPolygon merge_convex_hulls(const ConvexPolygon& p, const ConvexPolygon& q);

// Closed-set intersection test.
bool polygons_intersect(const ConvexPolygon& p, const ConvexPolygon& q);

// inner ⊆ outer as closed sets.
bool polygon_contains(const ConvexPolygon& outer, const ConvexPolygon& inner);

AABB bounding_box(const ConvexPolygon& p);

// For p.x within the polygon's x-extent: -1 if p is strictly below the
// polygon's vertical slice at p.x, +1 if strictly above, 0 if on it.
int vertical_side(const ConvexPolygon& poly, const Point& p);

// --- boxes ------------------------------------------------------------------

AABB box_of(std::span<const Point> points);
bool boxes_intersect(const AABB& a, const AABB& b);
AABB box_union(const AABB& a, const AABB& b);
bool box_contains(const AABB& outer, const AABB& inner);
bool box_contains(const AABB& b, const Point& p);

// --- circles (floating point) ---------------------------------------------

Circle min_enclosing_circle(std::span<const Point> points);
bool circles_intersect(const Circle& a, const Circle& b, double eps = kCircleEps);
// Smallest circle enclosing both discs.
Circle enclosing_circle(const Circle& a, const Circle& b);
bool circle_contains(const Circle& c, double x, double y, double eps = kCircleEps);

}  // namespace phicov
