#include "phicov/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace phicov {

ConvexPolygon convex_hull(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return ConvexPolygon(std::move(pts), ConvexPolygon::Trusted{});

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return ConvexPolygon(std::move(hull), ConvexPolygon::Trusted{});
}

ConvexPolygon::ConvexPolygon(std::vector<Point> ccw) {
  if (ccw.empty()) throw std::invalid_argument("ConvexPolygon: no vertices");
  ConvexPolygon hull = convex_hull(ccw);
  if (hull.size() != ccw.size()) throw std::invalid_argument("ConvexPolygon: vertices not strictly convex");
  auto start = std::min_element(ccw.begin(), ccw.end());
  std::rotate(ccw.begin(), start, ccw.end());
  if (ccw != hull.v_) throw std::invalid_argument("ConvexPolygon: vertices not in counter-clockwise order");
  v_ = std::move(ccw);
}

std::vector<Segment> ConvexPolygon::edges() const {
  std::vector<Segment> out;
  if (v_.size() == 2) {
    out.push_back({v_[0], v_[1]});
    out.push_back({v_[1], v_[0]});
  } else if (v_.size() > 2) {
    out.reserve(v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) out.push_back({v_[i], v_[(i + 1) % v_.size()]});
  }
  return out;
}

namespace {

// Boundary as undirected closed segments (a point polygon is one
// zero-length segment).
std::vector<Segment> boundary_segments(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  if (v.size() == 1) return {{v[0], v[0]}};
  if (v.size() == 2) return {{v[0], v[1]}};
  std::vector<Segment> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back({v[i], v[(i + 1) % v.size()]});
  return out;
}

template <class P>
Location locate(const P& p, const ConvexPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.size() == 1) return RationalPoint(v[0]) == RationalPoint(p) ? Location::boundary : Location::outside;
  if (v.size() == 2) {
    if (orient(v[0], v[1], p) != 0) return Location::outside;
    // Collinear: compare against the extremes with the same orientation
    // trick on a perpendicular direction.
    const Point perp_a{v[0].x - (v[1].y - v[0].y), v[0].y + (v[1].x - v[0].x)};
    const Point perp_b{v[1].x - (v[1].y - v[0].y), v[1].y + (v[1].x - v[0].x)};
    const int sa = orient(v[0], perp_a, p);
    const int sb = orient(v[1], perp_b, p);
    return (sa <= 0 && sb >= 0) ? Location::boundary : Location::outside;
  }
  bool on_edge = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int o = orient(v[i], v[(i + 1) % v.size()], p);
    if (o < 0) return Location::outside;
    if (o == 0) on_edge = true;
  }
  return on_edge ? Location::boundary : Location::inside;
}

}  // namespace

Location point_in_convex_polygon(const Point& p, const ConvexPolygon& poly) { return locate(p, poly); }
Location point_in_convex_polygon(const RationalPoint& p, const ConvexPolygon& poly) { return locate(p, poly); }

BoundaryContact boundary_intersection_points(const ConvexPolygon& p, const ConvexPolygon& q) {
  BoundaryContact out;
  for (const Segment& s : boundary_segments(p)) {
    for (const Segment& t : boundary_segments(q)) {
      const SegmentContact c = segments_intersect(s, t);
      if (c == SegmentContact::disjoint) continue;
      const bool collinear = s.a != s.b && t.a != t.b && orient(s.a, s.b, t.a) == 0 && orient(s.a, s.b, t.b) == 0;
      if (collinear && c == SegmentContact::crossing) {
        out.overlap = true;
        for (const Point& e : {s.a, s.b, t.a, t.b}) {
          if (on_segment(e, s) && on_segment(e, t)) out.points.emplace_back(e);
        }
        continue;
      }
      out.points.push_back(*segment_intersection_point(s, t));
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

ConvexPolygon merge_convex_hulls(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::vector<Point> all;
  all.reserve(p.size() + q.size());
  all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  all.insert(all.end(), q.vertices().begin(), q.vertices().end());
  return convex_hull(all);
}

AABB bounding_box(const ConvexPolygon& p) { return box_of(p.vertices()); }

namespace {

// Some edge of `p` has every vertex of `q` strictly on its outer side.
bool has_separating_edge(const ConvexPolygon& p, const ConvexPolygon& q) {
  const auto& v = p.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    const bool all_out = std::all_of(q.vertices().begin(), q.vertices().end(),
                                     [&](const Point& x) { return orient(a, b, x) < 0; });
    if (all_out) return true;
  }
  return false;
}

}  // namespace

bool polygons_intersect(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (!boxes_intersect(bounding_box(p), bounding_box(q))) return false;
  if (p.size() >= 3 && q.size() >= 3) return !has_separating_edge(p, q) && !has_separating_edge(q, p);
  for (const Point& x : p.vertices()) {
    if (point_in_convex_polygon(x, q) != Location::outside) return true;
  }
  for (const Point& x : q.vertices()) {
    if (point_in_convex_polygon(x, p) != Location::outside) return true;
  }
  for (const Segment& s : boundary_segments(p)) {
    for (const Segment& t : boundary_segments(q)) {
      if (segments_intersect(s, t) != SegmentContact::disjoint) return true;
    }
  }
  return false;
}

bool polygon_contains(const ConvexPolygon& outer, const ConvexPolygon& inner) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point& x) { return point_in_convex_polygon(x, outer) != Location::outside; });
}

int vertical_side(const ConvexPolygon& poly, const Point& p) {
  const auto& v = poly.vertices();
  if (v.size() == 1) return p.y < v[0].y ? -1 : (p.y > v[0].y ? 1 : 0);
  // The canonical start is the lexicographic minimum, so the lower chain
  // runs from v[0] to the lexicographic maximum.
  const std::size_t top = static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
  if (v.size() == 2 && v[0].x == v[1].x) return p.y < v[0].y ? -1 : (p.y > v[1].y ? 1 : 0);

  auto side_of_chain = [&](std::size_t from, std::size_t to) -> int {
    // Walk edges from `from` to `to` (cyclic) and test the one spanning p.x.
    const std::size_t n = v.size();
    for (std::size_t i = from; i != to; i = (i + 1) % n) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % n];
      if (a.x == b.x) continue;
      if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x)) return orient(a, b, p);
    }
    return 0;
  };

  if (v.size() == 2) {
    const int o = orient(v[0], v[1], p);
    return o < 0 ? -1 : (o > 0 ? 1 : 0);
  }
  std::int64_t xmin = v[0].x;
  std::int64_t xmax = v[top].x;
  if (p.x == xmin || p.x == xmax) {
    // Slice is a vertical segment (or a point).
    std::int64_t lo = INT64_MAX;
    std::int64_t hi = INT64_MIN;
    for (const Point& x : v) {
      if (x.x == p.x) {
        lo = std::min(lo, x.y);
        hi = std::max(hi, x.y);
      }
    }
    return p.y < lo ? -1 : (p.y > hi ? 1 : 0);
  }
  if (side_of_chain(0, top) < 0) return -1;
  if (side_of_chain(top, 0) < 0) return 1;
  return 0;
}

}  // namespace phicov
