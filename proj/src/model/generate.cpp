#include "phicov/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace phicov {

GenKind parse_gen_kind(const std::string& s) {
  if (s == "strips") return GenKind::strips;
  if (s == "combs") return GenKind::combs;
  if (s == "nested") return GenKind::nested;
  if (s == "mincircle-gadget") return GenKind::mincircle_gadget;
  if (s == "scatter") return GenKind::scatter;
  throw std::invalid_argument("unknown generator kind: " + s);
}

std::string gen_kind_name(GenKind k) {
  switch (k) {
    case GenKind::strips: return "strips";
    case GenKind::combs: return "combs";
    case GenKind::nested: return "nested";
    case GenKind::mincircle_gadget: return "mincircle-gadget";
    case GenKind::scatter: return "scatter";
  }
  return "?";
}

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

constexpr int kMaxRetries = 1000;

GeometricTree path_tree(std::vector<Point> pts) {
  GeometricTree t;
  t.vertices = std::move(pts);
  for (int i = 1; i < static_cast<int>(t.vertices.size()); ++i) t.edges.emplace_back(i - 1, i);
  return t;
}

bool trees_touch(const GeometricTree& a, const GeometricTree& b) {
  const AABB ba = box_of(a.vertices), bb = box_of(b.vertices);
  if (!boxes_intersect(ba, bb)) return false;
  auto segs = [](const GeometricTree& t) {
    std::vector<Segment> s = t.segments();
    if (t.edges.empty()) s.push_back({t.vertices[0], t.vertices[0]});
    return s;
  };
  for (const Segment& s : segs(a)) {
    for (const Segment& u : segs(b)) {
      if (segments_intersect(s, u) != SegmentContact::disjoint) return true;
    }
  }
  return false;
}

// x-monotone paths in vertical strips. Neighbouring strips overlap in x
// half of the time, with the two paths kept apart in y inside the overlap,
// so most hulls are disjoint and a few pairs merge.
Instance gen_strips(const GenParams& p, Rng& rng) {
  const int m = p.trees, k = p.vertices_per_tree;
  const std::int64_t width = p.range > 0 ? p.range : std::max<std::int64_t>(4 * k, 8);
  const std::int64_t height = 2 * width;
  const std::int64_t pitch = width + 2;
  Instance inst;
  for (int i = 0; i < m; ++i) {
    std::int64_t x0 = i * pitch;
    if (i > 0 && uniform(rng, 0, 1) == 1) x0 -= width / 4;
    bool placed = false;
    for (int attempt = 0; attempt < kMaxRetries && !placed; ++attempt) {
      std::set<std::int64_t> xs;
      while (static_cast<int>(xs.size()) < k) xs.insert(x0 + uniform(rng, 0, width - 1));
      std::vector<Point> pts;
      for (std::int64_t x : xs) pts.push_back({x, uniform(rng, 0, height)});
      GeometricTree t = path_tree(std::move(pts));
      placed = inst.trees.empty() || !trees_touch(inst.trees.back(), t);
      if (placed) inst.trees.push_back(std::move(t));
    }
    if (!placed) throw InfeasibleParams("strips: could not place tree " + std::to_string(i));
  }
  return inst;
}

// Clusters of nested, toothed L-shaped trees. Inside a cluster the L corners
// climb diagonally and every L lives in the quadrant above-right of its
// corner, so trees never cross while their hulls overlap heavily.
Instance gen_combs(const GenParams& p, Rng& rng) {
  const int m = p.trees, k = p.vertices_per_tree;
  if (k < 1) throw InfeasibleParams("combs: need at least one vertex per tree");
  const std::int64_t step = p.range > 0 ? std::max<std::int64_t>(p.range, 2 * k + 6) : 2 * k + 6;
  const std::int64_t half = step / 2;
  constexpr int kMaxGroup = 5;
  const std::int64_t cell = step * (2 * kMaxGroup + 4);

  std::vector<int> groups;
  for (int left = m; left > 0;) {
    const int g = std::min<int>(left, static_cast<int>(uniform(rng, 2, kMaxGroup)));
    groups.push_back(g);
    left -= g;
  }
  const auto cols = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(groups.size()))));
  if (cols * cell > 2 * kCoordLimit) throw InfeasibleParams("combs: instance exceeds the coordinate range");

  Instance inst;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const std::int64_t ox = static_cast<std::int64_t>(c) % cols * cell - kCoordLimit / 2;
    const std::int64_t oy = static_cast<std::int64_t>(c) / cols * cell - kCoordLimit / 2;
    const bool flip_x = uniform(rng, 0, 1) == 1, flip_y = uniform(rng, 0, 1) == 1;
    auto place = [&](std::int64_t x, std::int64_t y) {
      return Point{ox + (flip_x ? cell - 1 - x : x), oy + (flip_y ? cell - 1 - y : y)};
    };
    for (int j = 0; j < groups[c]; ++j) {
      const std::int64_t cx = step + j * step + uniform(rng, 0, step / 4);
      const std::int64_t cy = step + j * step + uniform(rng, 0, step / 4);
      const std::int64_t len_v = uniform(rng, step, step * (groups[c] + 1));
      const std::int64_t len_h = uniform(rng, step, step * (groups[c] + 1));

      GeometricTree t;
      auto add = [&](std::int64_t x, std::int64_t y) {
        t.vertices.push_back(place(x, y));
        return static_cast<int>(t.vertices.size()) - 1;
      };
      const int corner = add(cx, cy);
      if (k == 1) {
        inst.trees.push_back(std::move(t));
        continue;
      }
      if (k == 2) {
        const int end = uniform(rng, 0, 1) ? add(cx, cy + len_v) : add(cx + len_h, cy);
        t.edges.emplace_back(corner, end);
        inst.trees.push_back(std::move(t));
        continue;
      }
      const int extra = k - 3;
      const int teeth = extra / 2;
      // Teeth and the optional plain subdivision are spread over the arms.
      std::vector<std::int64_t> h_teeth, v_teeth, h_plain, v_plain;
      std::set<std::int64_t> used_h, used_v;
      auto pick = [&](std::set<std::int64_t>& used, std::int64_t len) {
        std::int64_t v;
        do v = uniform(rng, half, len - 1);
        while (!used.insert(v).second);
        return v;
      };
      for (int i = 0; i < teeth; ++i) {
        if (uniform(rng, 0, 1)) h_teeth.push_back(pick(used_h, len_h));
        else v_teeth.push_back(pick(used_v, len_v));
      }
      if (extra % 2 == 1) {
        if (uniform(rng, 0, 1)) h_plain.push_back(pick(used_h, len_h));
        else v_plain.push_back(pick(used_v, len_v));
      }

      // Horizontal arm.
      int prev = corner;
      for (std::int64_t off : used_h) {
        const int base = add(cx + off, cy);
        t.edges.emplace_back(prev, base);
        prev = base;
        if (std::find(h_teeth.begin(), h_teeth.end(), off) != h_teeth.end()) {
          t.edges.emplace_back(base, add(cx + off, cy + uniform(rng, 1, half - 1)));
        }
      }
      t.edges.emplace_back(prev, add(cx + len_h, cy));
      // Vertical arm.
      prev = corner;
      for (std::int64_t off : used_v) {
        const int base = add(cx, cy + off);
        t.edges.emplace_back(prev, base);
        prev = base;
        if (std::find(v_teeth.begin(), v_teeth.end(), off) != v_teeth.end()) {
          t.edges.emplace_back(base, add(cx + uniform(rng, 1, half - 1), cy + off));
        }
      }
      t.edges.emplace_back(prev, add(cx, cy + len_v));
      inst.trees.push_back(std::move(t));
    }
  }
  return inst;
}

// Concentric open rings (polygonal arcs) around the origin. Radii grow fast
// enough that every chord of ring i clears ring i-1.
Instance gen_nested(const GenParams& p, Rng& rng) {
  const int m = p.trees, k = p.vertices_per_tree;
  double r = p.range > 0 ? static_cast<double>(p.range) : 4.0 * k + 10.0;
  double inner = 0;  // outermost radius used so far

  Instance inst;
  for (int i = 0; i < m; ++i) {
    // With k >= 3 every ring wraps more than half way round, so its hull
    // holds the centre and all rings end up in one region.
    const double span = k >= 3 ? std::uniform_real_distribution<double>(200.0, 320.0)(rng) * std::numbers::pi / 180
                               : std::numbers::pi / 6 * (k - 1);
    const double step = k > 1 ? span / (k - 1) : 0.0;
    // Every chord keeps distance r cos(step / 2) from the centre, clear of the inner rings.
    if (i > 0) r = std::max(r, std::ceil((inner + 4.0) / std::cos(step / 2)));
    if (r > static_cast<double>(kCoordLimit) / 2) throw InfeasibleParams("nested: too many rings for the coordinate range");
    const double start = std::uniform_real_distribution<double>(0.0, 2 * std::numbers::pi)(rng);
    std::vector<Point> pts;
    for (int j = 0; j < k; ++j) {
      const double a = start + step * j;
      pts.push_back({std::llround(r * std::cos(a)), std::llround(r * std::sin(a))});
    }
    inst.trees.push_back(path_tree(std::move(pts)));
    inner = r + 1;
    r += 4;
  }
  return inst;
}

// Four segments whose minimum-enclosing-circle cover depends on merge
// order: circles 1-2 and 1-3 overlap; merging 1 with 3 first reaches
// circle 4, merging 1 with 2 first (then 3) does not.
Instance gen_mincircle_gadget(Rng& rng) {
  const std::int64_t dx = uniform(rng, -1000000, 1000000);
  const std::int64_t dy = uniform(rng, -1000000, 1000000);
  auto at = [&](std::int64_t x, std::int64_t y) { return Point{x + dx, y + dy}; };
  Instance inst;
  inst.trees.push_back(path_tree({at(-100, 0), at(100, 0)}));
  inst.trees.push_back(path_tree({at(0, 90), at(0, 130)}));
  inst.trees.push_back(path_tree({at(110, -20), at(110, 20)}));
  inst.trees.push_back(path_tree({at(15, -113)}));
  return inst;
}

// Random trees grown edge by edge on a small grid, so collinear and
// touching-hull configurations show up often.
Instance gen_scatter(const GenParams& p, Rng& rng) {
  const int m = p.trees, k = p.vertices_per_tree;
  const std::int64_t range =
      p.range > 0 ? p.range : static_cast<std::int64_t>(4 * std::sqrt(static_cast<double>(m) * std::max(k, 1))) + 8;
  std::vector<Segment> segs;
  std::set<Point> verts;

  auto free_point = [&](const Point& q) {
    if (verts.count(q)) return false;
    return std::none_of(segs.begin(), segs.end(), [&](const Segment& s) { return on_segment(q, s); });
  };
  auto edge_ok = [&](const Point& u, const Point& q) {
    const Segment e{u, q};
    for (const Segment& s : segs) {
      const bool incident = s.a == u || s.b == u;
      if (!incident) {
        if (segments_intersect(e, s) != SegmentContact::disjoint) return false;
        continue;
      }
      const Point& other = s.a == u ? s.b : s.a;
      if (on_segment(q, s) || on_segment(other, e)) return false;
    }
    for (const Point& v : verts) {
      if (v != u && on_segment(v, e)) return false;
    }
    return true;
  };

  Instance inst;
  for (int i = 0; i < m; ++i) {
    GeometricTree t;
    for (int attempt = 0; attempt < kMaxRetries && t.vertices.empty(); ++attempt) {
      const Point q{uniform(rng, 0, range), uniform(rng, 0, range)};
      if (free_point(q)) t.vertices.push_back(q);
    }
    if (t.vertices.empty()) throw InfeasibleParams("scatter: no room for tree " + std::to_string(i));
    verts.insert(t.vertices[0]);
    for (int v = 1; v < k; ++v) {
      bool grown = false;
      for (int attempt = 0; attempt < kMaxRetries && !grown; ++attempt) {
        const int from = static_cast<int>(uniform(rng, 0, static_cast<std::int64_t>(t.vertices.size()) - 1));
        const Point u = t.vertices[from];
        const std::int64_t reach = std::max<std::int64_t>(2, range / 4);
        const Point q{std::clamp(u.x + uniform(rng, -reach, reach), std::int64_t{0}, range),
                      std::clamp(u.y + uniform(rng, -reach, reach), std::int64_t{0}, range)};
        if (q == u || !free_point(q) || !edge_ok(u, q)) continue;
        t.vertices.push_back(q);
        t.edges.emplace_back(from, static_cast<int>(t.vertices.size()) - 1);
        verts.insert(q);
        segs.push_back({u, q});
        grown = true;
      }
      if (!grown) break;  // crowded: keep the tree smaller
    }
    inst.trees.push_back(std::move(t));
  }
  return inst;
}

}  // namespace

Instance generate(GenKind kind, const GenParams& params, std::uint64_t seed) {
  if (kind != GenKind::mincircle_gadget && (params.trees < 1 || params.vertices_per_tree < 1)) {
    throw InfeasibleParams("need at least one tree with at least one vertex");
  }
  Rng rng(seed);
  switch (kind) {
    case GenKind::strips: return gen_strips(params, rng);
    case GenKind::combs: return gen_combs(params, rng);
    case GenKind::nested: return gen_nested(params, rng);
    case GenKind::mincircle_gadget: return gen_mincircle_gadget(rng);
    case GenKind::scatter: return gen_scatter(params, rng);
  }
  throw std::invalid_argument("unknown generator kind");
}

}  // namespace phicov
