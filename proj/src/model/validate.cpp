#include "phicov/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace phicov {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::bad_edge_index: return "bad-edge-index";
    case Rule::self_loop: return "self-loop";
    case Rule::duplicate_edge: return "duplicate-edge";
    case Rule::edge_count: return "edge-count";
    case Rule::not_connected: return "not-connected";
    case Rule::duplicate_vertex: return "duplicate-vertex";
    case Rule::vertex_on_edge: return "vertex-on-edge";
    case Rule::self_crossing: return "self-crossing";
    case Rule::trees_cross: return "trees-cross";
    case Rule::shared_vertex: return "shared-vertex";
    case Rule::shared_coordinate: return "shared-coordinate";
  }
  return "unknown";
}

bool has_errors(const std::vector<Violation>& v) {
  return std::any_of(v.begin(), v.end(), [](const Violation& x) { return !x.warning; });
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void check_tree_structure(const GeometricTree& t, int ti, std::vector<Violation>& out, bool& indices_ok) {
  const int nv = static_cast<int>(t.vertices.size());
  const std::string name = "tree " + std::to_string(ti);
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    auto [i, j] = t.edges[e];
    const std::pair<int, int> edge_ref{ti, static_cast<int>(e)};
    if (i < 0 || j < 0 || i >= nv || j >= nv) {
      out.push_back({Rule::bad_edge_index, {ti}, {}, {edge_ref}, name + " edge " + std::to_string(e) + " has an index out of range"});
      indices_ok = false;
      continue;
    }
    if (i == j) {
      out.push_back({Rule::self_loop, {ti}, {t.vertices[i]}, {edge_ref}, name + " edge " + std::to_string(e) + " is a self-loop"});
      continue;
    }
    if (!seen.insert(std::minmax(i, j)).second) {
      out.push_back({Rule::duplicate_edge, {ti}, {t.vertices[i], t.vertices[j]}, {edge_ref},
                     name + " edge " + std::to_string(e) + " duplicates an earlier edge"});
    }
  }
  if (static_cast<int>(t.edges.size()) != nv - 1) {
    out.push_back({Rule::edge_count, {ti}, {}, {},
                   name + " has " + std::to_string(t.edges.size()) + " edges for " + std::to_string(nv) + " vertices"});
  }
  if (!indices_ok || nv == 0) return;
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  int components = nv;
  for (auto [i, j] : t.edges) {
    const int a = find_root(parent, i), b = find_root(parent, j);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (components > 1) out.push_back({Rule::not_connected, {ti}, {}, {}, name + " is not connected"});
}

struct Item {
  Segment seg;
  int tree;
  int edge;  // -1 for a bare vertex
  std::int64_t xmin, xmax, ymin, ymax;
};

Item make_item(const Segment& s, int tree, int edge) {
  return {s, tree, edge, std::min(s.a.x, s.b.x), std::max(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y)};
}

void check_pair(const Item& p, const Item& q, std::vector<Violation>& out) {
  if (p.ymax < q.ymin || q.ymax < p.ymin) return;
  const bool p_vert = p.edge < 0, q_vert = q.edge < 0;
  if (p_vert && q_vert) return;  // duplicates are found by sorting
  if (p_vert || q_vert) {
    const Item& v = p_vert ? p : q;
    const Item& e = p_vert ? q : p;
    if (in_segment_interior(v.seg.a, e.seg)) {
      out.push_back({Rule::vertex_on_edge, {v.tree, e.tree}, {v.seg.a}, {{e.tree, e.edge}},
                     "vertex " + to_string(v.seg.a) + " of tree " + std::to_string(v.tree) + " lies on edge " +
                         std::to_string(e.edge) + " of tree " + std::to_string(e.tree)});
    }
    return;
  }
  const SegmentContact c = segments_intersect(p.seg, q.seg);
  if (c != SegmentContact::crossing) return;  // touches are vertex-on-edge or shared vertices
  const RationalPoint x = *segment_intersection_point(p.seg, q.seg);
  if (p.tree == q.tree) {
    out.push_back({Rule::self_crossing, {p.tree}, {}, {{p.tree, p.edge}, {q.tree, q.edge}},
                   "tree " + std::to_string(p.tree) + " edges " + std::to_string(p.edge) + " and " + std::to_string(q.edge) +
                       " cross at " + to_string(x)});
  } else {
    out.push_back({Rule::trees_cross, {p.tree, q.tree}, {}, {{p.tree, p.edge}, {q.tree, q.edge}},
                   "trees " + std::to_string(p.tree) + " and " + std::to_string(q.tree) + " cross at " + to_string(x)});
  }
}

void check_coordinates(const Instance& inst, std::vector<Violation>& out) {
  // One warning per shared coordinate value.
  for (int axis = 0; axis < 2; ++axis) {
    std::map<std::int64_t, std::set<int>> owners;
    for (std::size_t t = 0; t < inst.trees.size(); ++t) {
      for (const Point& p : inst.trees[t].vertices) owners[axis == 0 ? p.x : p.y].insert(static_cast<int>(t));
    }
    for (const auto& [value, trees] : owners) {
      if (trees.size() < 2) continue;
      Violation v{Rule::shared_coordinate, {trees.begin(), trees.end()}, {}, {},
                  std::string(axis == 0 ? "x" : "y") + " = " + std::to_string(value) + " is shared by " +
                      std::to_string(trees.size()) + " trees",
                  true};
      out.push_back(std::move(v));
    }
  }
}

}  // namespace

std::vector<Violation> validate_instance(const Instance& inst) {
  std::vector<Violation> out;
  bool indices_ok = true;
  for (std::size_t t = 0; t < inst.trees.size(); ++t) {
    bool ok = true;
    check_tree_structure(inst.trees[t], static_cast<int>(t), out, ok);
    indices_ok = indices_ok && ok;
  }
  if (!indices_ok) return out;

  // Duplicate vertices, within a tree or across trees.
  std::vector<std::pair<Point, int>> all;
  for (std::size_t t = 0; t < inst.trees.size(); ++t) {
    for (const Point& p : inst.trees[t].vertices) all.emplace_back(p, static_cast<int>(t));
  }
  std::sort(all.begin(), all.end());
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i].first != all[i - 1].first) continue;
    const int a = all[i - 1].second, b = all[i].second;
    if (a == b) {
      out.push_back({Rule::duplicate_vertex, {a}, {all[i].first}, {},
                     "tree " + std::to_string(a) + " repeats vertex " + to_string(all[i].first)});
    } else {
      out.push_back({Rule::shared_vertex, {a, b}, {all[i].first}, {},
                     "trees " + std::to_string(a) + " and " + std::to_string(b) + " share vertex " + to_string(all[i].first)});
    }
  }

  // Sweep over x-extents; every overlapping pair gets an exact test.
  std::vector<Item> items;
  for (std::size_t t = 0; t < inst.trees.size(); ++t) {
    const auto& tree = inst.trees[t];
    for (std::size_t e = 0; e < tree.edges.size(); ++e) {
      auto [i, j] = tree.edges[e];
      if (i == j) continue;
      items.push_back(make_item({tree.vertices[i], tree.vertices[j]}, static_cast<int>(t), static_cast<int>(e)));
    }
    for (const Point& p : tree.vertices) items.push_back(make_item({p, p}, static_cast<int>(t), -1));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.xmin < b.xmin; });
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size() && items[j].xmin <= items[i].xmax; ++j) {
      check_pair(items[i], items[j], out);
    }
  }

  check_coordinates(inst, out);
  return out;
}

}  // namespace phicov
