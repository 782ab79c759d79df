#include "phicov/geom.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace phicov {

AABB box_of(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("box_of: empty point set");
  AABB b{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const Point& p : points.subspan(1)) {
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
  }
  return b;
}

bool boxes_intersect(const AABB& a, const AABB& b) {
  return a.xmin <= b.xmax && b.xmin <= a.xmax && a.ymin <= b.ymax && b.ymin <= a.ymax;
}

AABB box_union(const AABB& a, const AABB& b) {
  return {std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin), std::max(a.xmax, b.xmax), std::max(a.ymax, b.ymax)};
}

bool box_contains(const AABB& outer, const AABB& inner) {
  return outer.xmin <= inner.xmin && inner.xmax <= outer.xmax && outer.ymin <= inner.ymin && inner.ymax <= outer.ymax;
}

bool box_contains(const AABB& b, const Point& p) {
  return b.xmin <= p.x && p.x <= b.xmax && b.ymin <= p.y && p.y <= b.ymax;
}

// --- circles ----------------------------------------------------------------

namespace {

struct Vec {
  double x, y;
};

Circle diametral(Vec a, Vec b) {
  const double cx = (a.x + b.x) / 2;
  const double cy = (a.y + b.y) / 2;
  return {cx, cy, std::hypot(a.x - cx, a.y - cy)};
}

// Relative slack inside the incremental algorithm only; it keeps points that
// sit on the boundary from being re-added because of rounding.
bool covers(const Circle& c, Vec p) {
  const double d = std::hypot(p.x - c.cx, p.y - c.cy);
  return d <= c.r * (1 + 1e-12) + 1e-12;
}

Circle circumcircle(Vec a, Vec b, Vec c) {
  const double bx = b.x - a.x, by = b.y - a.y;
  const double cx = c.x - a.x, cy = c.y - a.y;
  const double d = 2 * (bx * cy - by * cx);
  if (d == 0) {
    // Collinear: widest pair.
    Circle best = diametral(a, b);
    for (const Circle& cand : {diametral(a, c), diametral(b, c)}) {
      if (cand.r > best.r) best = cand;
    }
    return best;
  }
  const double b2 = bx * bx + by * by;
  const double c2 = cx * cx + cy * cy;
  const double ux = (cy * b2 - by * c2) / d;
  const double uy = (bx * c2 - cx * b2) / d;
  return {a.x + ux, a.y + uy, std::hypot(ux, uy)};
}

}  // namespace

Circle min_enclosing_circle(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("min_enclosing_circle: empty point set");
  std::vector<Vec> p;
  p.reserve(points.size());
  for (const Point& q : points) p.push_back({static_cast<double>(q.x), static_cast<double>(q.y)});
  // Fixed seed: the result must not depend on anything but the input.
  std::mt19937_64 rng(0x5eed);
  std::shuffle(p.begin(), p.end(), rng);

  Circle c{p[0].x, p[0].y, 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (covers(c, p[i])) continue;
    c = {p[i].x, p[i].y, 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (covers(c, p[j])) continue;
      c = diametral(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!covers(c, p[k])) c = circumcircle(p[i], p[j], p[k]);
      }
    }
  }
  return c;
}

bool circles_intersect(const Circle& a, const Circle& b, double eps) {
  return std::hypot(a.cx - b.cx, a.cy - b.cy) <= a.r + b.r + eps;
}

Circle enclosing_circle(const Circle& a, const Circle& b) {
  const double d = std::hypot(b.cx - a.cx, b.cy - a.cy);
  if (d + b.r <= a.r) return a;
  if (d + a.r <= b.r) return b;
  const double r = (d + a.r + b.r) / 2;
  const double s = (r - a.r) / d;
  return {a.cx + s * (b.cx - a.cx), a.cy + s * (b.cy - a.cy), r};
}

bool circle_contains(const Circle& c, double x, double y, double eps) {
  const double dx = x - c.cx, dy = y - c.cy;
  return dx * dx + dy * dy <= c.r * c.r + eps;
}

}  // namespace phicov
