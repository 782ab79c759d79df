#include "phicov/phi.hpp"

#include "json.hpp"

#include <cmath>
#include <stdexcept>

namespace phicov {

PhiKind parse_phi_kind(const std::string& s) {
  if (s == "hull") return PhiKind::hull;
  if (s == "box") return PhiKind::box;
  if (s == "mincircle") return PhiKind::mincircle;
  throw std::invalid_argument("unknown phi: " + s);
}

std::string phi_kind_name(PhiKind k) {
  switch (k) {
    case PhiKind::hull: return "hull";
    case PhiKind::box: return "box";
    case PhiKind::mincircle: return "mincircle";
  }
  return "?";
}

Region PhiFunction::apply(std::span<const Point> points) const {
  switch (kind_) {
    case PhiKind::hull: return convex_hull(points);
    case PhiKind::box: return box_of(points);
    case PhiKind::mincircle: return min_enclosing_circle(points);
  }
  throw std::logic_error("bad phi kind");
}

bool PhiFunction::intersect(const Region& a, const Region& b) const {
  switch (kind_) {
    case PhiKind::hull: return polygons_intersect(std::get<ConvexPolygon>(a), std::get<ConvexPolygon>(b));
    case PhiKind::box: return boxes_intersect(std::get<AABB>(a), std::get<AABB>(b));
    case PhiKind::mincircle: return circles_intersect(std::get<Circle>(a), std::get<Circle>(b), eps_);
  }
  throw std::logic_error("bad phi kind");
}

Region PhiFunction::merge(const Region& a, const Region& b) const {
  switch (kind_) {
    case PhiKind::hull: return merge_convex_hulls(std::get<ConvexPolygon>(a), std::get<ConvexPolygon>(b));
    case PhiKind::box: return box_union(std::get<AABB>(a), std::get<AABB>(b));
    case PhiKind::mincircle: return enclosing_circle(std::get<Circle>(a), std::get<Circle>(b));
  }
  throw std::logic_error("bad phi kind");
}

bool PhiFunction::contains(const Region& outer, const Region& inner) const {
  switch (kind_) {
    case PhiKind::hull: return polygon_contains(std::get<ConvexPolygon>(outer), std::get<ConvexPolygon>(inner));
    case PhiKind::box: return box_contains(std::get<AABB>(outer), std::get<AABB>(inner));
    case PhiKind::mincircle: {
      const Circle& o = std::get<Circle>(outer);
      const Circle& i = std::get<Circle>(inner);
      return std::hypot(o.cx - i.cx, o.cy - i.cy) + i.r <= o.r + eps_;
    }
  }
  throw std::logic_error("bad phi kind");
}

std::vector<int> MergeForest::leaves_under(int node) const {
  std::vector<int> out, stack{node};
  while (!stack.empty()) {
    const MergeNode& n = nodes[stack.back()];
    stack.pop_back();
    if (n.leaf >= 0) {
      out.push_back(n.leaf);
    } else {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

nlohmann::json region_json(const Region& r) {
  using nlohmann::json;
  if (const auto* p = std::get_if<ConvexPolygon>(&r)) {
    json v = json::array();
    for (const Point& q : p->vertices()) v.push_back({q.x, q.y});
    return {{"vertices", v}};
  }
  if (const auto* b = std::get_if<AABB>(&r)) return {{"box", {b->xmin, b->ymin, b->xmax, b->ymax}}};
  const Circle& c = std::get<Circle>(r);
  return {{"circle", {c.cx, c.cy, c.r}}};
}

}  // namespace

std::string serialize_forest(const MergeForest& forest, const PhiFunction& phi) {
  using nlohmann::json;
  // Built bottom-up (children always precede parents) to avoid recursion.
  std::vector<json> built(forest.nodes.size());
  for (std::size_t i = 0; i < forest.nodes.size(); ++i) {
    const MergeNode& n = forest.nodes[i];
    json j = {{"id", i}, {"region", region_json(n.value)}};
    if (n.leaf >= 0) {
      j["leaf"] = n.leaf;
    } else {
      j["children"] = json::array({std::move(built[n.left]), std::move(built[n.right])});
    }
    built[i] = std::move(j);
  }
  json roots = json::array();
  for (int r : forest.roots) roots.push_back(std::move(built[r]));
  return json{{"phi", phi.name()}, {"roots", roots}}.dump() + "\n";
}

std::string MergePolicy::describe() const {
  switch (strategy) {
    case Strategy::first_found: return "first-found";
    case Strategy::random: return "random(" + std::to_string(seed) + ")";
    case Strategy::scripted: {
      std::string s = "scripted[";
      for (std::size_t i = 0; i < script.size(); ++i) {
        s += (i ? " " : "") + std::to_string(script[i].first) + "+" + std::to_string(script[i].second);
      }
      return s + "]";
    }
  }
  return "?";
}

}  // namespace phicov
