#include "phicov/geom.hpp"

#include <algorithm>
#include <utility>

namespace phicov {

namespace {

i128 cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<i128>(a.x - o.x) * (b.y - o.y) - static_cast<i128>(a.y - o.y) * (b.x - o.x);
}

// Position of p along the dominant axis of s, used for collinear overlap.
std::int64_t axis_coord(const Point& p, bool use_x) { return use_x ? p.x : p.y; }

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) { return sign(cross(a, b, c)); }

int orient(const Point& a, const Point& b, const RationalPoint& c) {
  if (c.den == 1) return orient(a, b, c.to_point());
  const BigInt den = to_big(c.den);
  const BigInt cx = to_big(c.xn) - BigInt(a.x) * den;
  const BigInt cy = to_big(c.yn) - BigInt(a.y) * den;
  const BigInt v = BigInt(b.x - a.x) * cy - BigInt(b.y - a.y) * cx;
  return v.sign();
}

bool on_segment(const Point& p, const Segment& s) {
  if (orient(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

bool in_segment_interior(const Point& p, const Segment& s) { return p != s.a && p != s.b && on_segment(p, s); }

SegmentContact segments_intersect(const Segment& s, const Segment& t) {
  if (s.a == s.b) return on_segment(s.a, t) ? SegmentContact::touching : SegmentContact::disjoint;
  if (t.a == t.b) return on_segment(t.a, s) ? SegmentContact::touching : SegmentContact::disjoint;

  const int o1 = orient(s.a, s.b, t.a);
  const int o2 = orient(s.a, s.b, t.b);
  const int o3 = orient(t.a, t.b, s.a);
  const int o4 = orient(t.a, t.b, s.b);

  if (o1 == 0 && o2 == 0) {
    const bool use_x = s.a.x != s.b.x;
    const std::int64_t sa = axis_coord(s.a, use_x), sb = axis_coord(s.b, use_x);
    const std::int64_t ta = axis_coord(t.a, use_x), tb = axis_coord(t.b, use_x);
    const std::int64_t s0 = std::min(sa, sb), s1 = std::max(sa, sb);
    const std::int64_t t0 = std::min(ta, tb), t1 = std::max(ta, tb);
    const std::int64_t lo = std::max(s0, t0);
    const std::int64_t hi = std::min(s1, t1);
    if (lo > hi) return SegmentContact::disjoint;
    return lo == hi ? SegmentContact::touching : SegmentContact::crossing;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegmentContact::crossing;
  if ((o1 == 0 && on_segment(t.a, s)) || (o2 == 0 && on_segment(t.b, s)) || (o3 == 0 && on_segment(s.a, t)) ||
      (o4 == 0 && on_segment(s.b, t))) {
    return SegmentContact::touching;
  }
  return SegmentContact::disjoint;
}

std::optional<RationalPoint> segment_intersection_point(const Segment& s, const Segment& t) {
  const SegmentContact c = segments_intersect(s, t);
  if (c == SegmentContact::disjoint) return std::nullopt;
  if (s.a == s.b) return RationalPoint(s.a);
  if (t.a == t.b) return RationalPoint(t.a);

  const Point d{s.b.x - s.a.x, s.b.y - s.a.y};
  const Point e{t.b.x - t.a.x, t.b.y - t.a.y};
  const i128 den = static_cast<i128>(d.x) * e.y - static_cast<i128>(d.y) * e.x;
  if (den == 0) {
    // Collinear overlap: the candidate nearest s.a among s.a, t.a, t.b.
    std::optional<Point> best;
    auto dist = [&](const Point& p) { return static_cast<i128>(p.x - s.a.x) * d.x + static_cast<i128>(p.y - s.a.y) * d.y; };
    for (const Point& p : {s.a, t.a, t.b}) {
      if (on_segment(p, s) && on_segment(p, t) && (!best || dist(p) < dist(*best))) best = p;
    }
    return RationalPoint(*best);
  }
  for (const Point& p : {t.a, t.b}) {
    if (on_segment(p, s)) return RationalPoint(p);
  }
  for (const Point& p : {s.a, s.b}) {
    if (on_segment(p, t)) return RationalPoint(p);
  }
  const i128 num = static_cast<i128>(t.a.x - s.a.x) * e.y - static_cast<i128>(t.a.y - s.a.y) * e.x;
  return RationalPoint(s.a.x * den + num * d.x, s.a.y * den + num * d.y, den);
}

}  // namespace phicov
