#include "support.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace phicov::testing {

GeometricTree path(std::vector<Point> pts) {
  GeometricTree t;
  t.vertices = std::move(pts);
  for (int i = 1; i < static_cast<int>(t.vertices.size()); ++i) t.edges.emplace_back(i - 1, i);
  return t;
}

GeometricTree single(Point p) { return path({p}); }

Instance instance_a() { return {{path({{0, 0}, {10, 0}, {10, 10}, {0, 10}}), single({5, 5})}}; }

Instance instance_b() { return {{path({{0, 0}, {1, 0}}), path({{5, 5}, {6, 5}})}}; }

Instance instance_d() {
  Instance i = instance_a();
  i.trees.push_back(path({{-2, 5}, {2, 5}}));
  return i;
}

Instance instance_e() {
  return {{path({{0, 0}, {4, 2}}), path({{3, -1}, {5, 1}}), path({{10, 10}, {11, 12}})}};
}

namespace {

i128 cross(const Point& a, const Point& b, const Point& c) {
  return static_cast<i128>(b.x - a.x) * (c.y - a.y) - static_cast<i128>(b.y - a.y) * (c.x - a.x);
}

bool between(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

std::vector<Point> brute_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return pts;
  const bool all_collinear =
      std::all_of(pts.begin(), pts.end(), [&](const Point& p) { return cross(pts.front(), pts.back(), p) == 0; });
  if (all_collinear) return {pts.front(), pts.back()};

  std::vector<std::pair<Point, Point>> edges;
  for (const Point& a : pts) {
    for (const Point& b : pts) {
      if (a == b) continue;
      const bool ok = std::all_of(pts.begin(), pts.end(), [&](const Point& p) {
        const i128 c = cross(a, b, p);
        return c > 0 || (c == 0 && between(a, b, p));
      });
      if (ok) edges.emplace_back(a, b);
    }
  }
  std::vector<Point> out{pts.front()};
  while (true) {
    const auto it = std::find_if(edges.begin(), edges.end(), [&](const auto& e) { return e.first == out.back(); });
    if (it == edges.end() || it->second == out.front()) break;
    out.push_back(it->second);
  }
  return out;
}

namespace {

std::vector<Segment> sides(const ConvexPolygon& p) {
  const auto& v = p.vertices();
  if (v.size() == 1) return {{v[0], v[0]}};
  if (v.size() == 2) return {{v[0], v[1]}};
  std::vector<Segment> s;
  for (std::size_t i = 0; i < v.size(); ++i) s.push_back({v[i], v[(i + 1) % v.size()]});
  return s;
}

}  // namespace

std::vector<RationalPoint> brute_boundary_points(const ConvexPolygon& p, const ConvexPolygon& q) {
  std::set<RationalPoint> out;
  for (const Segment& s : sides(p)) {
    for (const Segment& t : sides(q)) {
      // Endpoints lying on the other segment cover touching and overlap.
      for (const Point& e : {s.a, s.b}) {
        if (cross(t.a, t.b, e) == 0 && between(t.a, t.b, e)) out.insert(e);
      }
      for (const Point& e : {t.a, t.b}) {
        if (cross(s.a, s.b, e) == 0 && between(s.a, s.b, e)) out.insert(e);
      }
      // Proper crossing: endpoints strictly on opposite sides both ways.
      const i128 c1 = cross(s.a, s.b, t.a), c2 = cross(s.a, s.b, t.b);
      const i128 c3 = cross(t.a, t.b, s.a), c4 = cross(t.a, t.b, s.b);
      if (((c1 > 0 && c2 < 0) || (c1 < 0 && c2 > 0)) && ((c3 > 0 && c4 < 0) || (c3 < 0 && c4 > 0))) {
        // s.a + (c3 / (c3 - c4)) (s.b - s.a)
        const i128 den = c3 - c4;
        out.insert(RationalPoint(s.a.x * den + c3 * (s.b.x - s.a.x), s.a.y * den + c3 * (s.b.y - s.a.y), den));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> brute_maximal(const std::vector<ConvexPolygon>& polys) {
  std::vector<int> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < polys.size() && !inside; ++j) {
      inside = j != i && polygon_contains(polys[j], polys[i]) && !polygon_contains(polys[i], polys[j]);
    }
    if (!inside) out.push_back(static_cast<int>(i));
  }
  return out;
}

Instance random_instance(std::uint64_t seed, int max_n) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  static constexpr GenKind kinds[] = {GenKind::strips, GenKind::combs, GenKind::nested, GenKind::scatter};
  const GenKind kind = kinds[seed % 4];
  GenParams p;
  p.trees = std::uniform_int_distribution<int>(1, 14)(rng);
  const int max_k = std::max(1, std::min(16, max_n / p.trees));
  p.vertices_per_tree = std::uniform_int_distribution<int>(1, max_k)(rng);
  if (kind == GenKind::nested) p.trees = std::min(p.trees, 8);
  return generate(kind, p, seed);
}

Instance permuted(const Instance& inst, const std::vector<int>& perm) {
  Instance out;
  out.trees.resize(inst.trees.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.trees[static_cast<std::size_t>(perm[i])] = inst.trees[i];
  return out;
}

}  // namespace phicov::testing
