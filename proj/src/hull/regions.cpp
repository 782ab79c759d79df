#include "phicov/hull.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace phicov {

namespace {

struct Probe {
  Point v;
};

// Orders pairwise disjoint polygons that are all cut by the current sweep
// line from bottom to top. Only ever compares an active polygon with the one
// being inserted (or a probe point), which starts at the sweep line.
struct BottomToTop {
  using is_transparent = void;
  const std::vector<ConvexPolygon>* polys;

  const ConvexPolygon& at(int i) const { return (*polys)[static_cast<std::size_t>(i)]; }

  // +1 if `newer` (leftmost vertex at the sweep line) lies above `older`.
  int side(int older, int newer) const {
    const Point v = at(newer)[0];
    const int s = vertical_side(at(older), v);
    if (s != 0) return s;
    // Touching at v: newer is above iff v is the top of older's slice.
    return vertical_side(at(older), Point{v.x, v.y + 1}) > 0 ? 1 : -1;
  }

  bool operator()(int a, int b) const {
    if (a == b) return false;
    if (at(a)[0] < at(b)[0]) return side(a, b) > 0;
    return side(b, a) < 0;
  }
  bool operator()(int q, const Probe& p) const { return vertical_side(at(q), p.v) > 0; }
  bool operator()(const Probe& p, int q) const { return vertical_side(at(q), p.v) < 0; }
};

}  // namespace

std::vector<int> maximal_containers(std::span<const ConvexPolygon> input) {
  const std::vector<ConvexPolygon> polys(input.begin(), input.end());
  const std::size_t k = polys.size();
  std::vector<int> container(k, -1);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return polys[a][0] < polys[b][0]; });

  std::set<int, BottomToTop> active(BottomToTop{&polys});
  std::vector<std::set<int, BottomToTop>::iterator> where(k, active.end());
  using Expiry = std::pair<std::int64_t, int>;
  std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiry;

  for (int i : order) {
    const ConvexPolygon& p = polys[static_cast<std::size_t>(i)];
    const Point v = p[0];
    while (!expiry.empty() && expiry.top().first < v.x) {
      active.erase(where[static_cast<std::size_t>(expiry.top().second)]);
      expiry.pop();
    }
    for (auto it = active.lower_bound(Probe{v}); it != active.end(); ++it) {
      const ConvexPolygon& q = polys[static_cast<std::size_t>(*it)];
      if (vertical_side(q, v) != 0) break;
      if (point_in_convex_polygon(v, q) == Location::inside || polygon_contains(q, p)) {
        container[static_cast<std::size_t>(i)] = *it;
        break;
      }
    }
    if (container[static_cast<std::size_t>(i)] >= 0) continue;
    where[static_cast<std::size_t>(i)] = active.insert(i).first;
    expiry.emplace(bounding_box(p).xmax, i);
  }
  return container;
}

std::vector<int> maximal_regions(std::span<const ConvexPolygon> polys) {
  const std::vector<int> c = maximal_containers(polys);
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool weakly_disjoint(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::vector<Point> a = p.vertices(), b = q.vertices();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Point> shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  if (!shared.empty()) return false;
  return boundary_intersection_points(p, q).points.size() <= 2;
}

}  // namespace phicov
