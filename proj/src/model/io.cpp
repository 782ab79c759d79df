#include "phicov/model.hpp"

#include "json.hpp"

#include <cmath>
#include <limits>

namespace phicov {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at " + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(kCoordLimit)) {
    throw ParseError(where + ": value " + j.dump() + " out of range");
  }
  return j.get<std::int64_t>();
}

Point as_point(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected [x,y]");
  Point p{as_int(j[0], where), as_int(j[1], where)};
  if (!in_coord_range(p)) throw ParseError(where + ": coordinate " + to_string(p) + " out of range (|c| <= 2^30)");
  return p;
}

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

json point_json(const Point& p) { return json::array({p.x, p.y}); }

}  // namespace

namespace {

Instance instance_from_json(const json& doc) {
  const json& trees = member(doc, "trees", "instance");
  if (!trees.is_array()) throw ParseError("instance: \"trees\" must be an array");
  if (trees.empty()) throw ParseError("instance: empty forest");

  Instance inst;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const std::string where = "tree " + std::to_string(t);
    GeometricTree tree;
    const json& verts = member(trees[t], "vertices", where);
    const json& edges = member(trees[t], "edges", where);
    if (!verts.is_array() || verts.empty()) throw ParseError(where + ": \"vertices\" must be a non-empty array");
    if (!edges.is_array()) throw ParseError(where + ": \"edges\" must be an array");
    for (std::size_t i = 0; i < verts.size(); ++i) {
      tree.vertices.push_back(as_point(verts[i], where + " vertex " + std::to_string(i)));
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string ew = where + " edge " + std::to_string(e);
      if (!edges[e].is_array() || edges[e].size() != 2) throw ParseError(ew + ": expected [i,j]");
      const std::int64_t i = as_int(edges[e][0], ew);
      const std::int64_t j = as_int(edges[e][1], ew);
      const auto nv = static_cast<std::int64_t>(tree.vertices.size());
      if (i < 0 || j < 0 || i >= nv || j >= nv) {
        throw ParseError(ew + ": bad edge index [" + std::to_string(i) + "," + std::to_string(j) + "]");
      }
      tree.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    inst.trees.push_back(std::move(tree));
  }
  return inst;
}

// Multiplies every vertex coordinate by `scale`; the results must be integers.
void scale_coordinates(json& doc, double scale) {
  if (!doc.is_object() || !doc.contains("trees") || !doc["trees"].is_array()) return;
  for (std::size_t t = 0; t < doc["trees"].size(); ++t) {
    json& tree = doc["trees"][t];
    if (!tree.is_object() || !tree.contains("vertices") || !tree["vertices"].is_array()) continue;
    for (json& v : tree["vertices"]) {
      if (!v.is_array()) continue;
      for (json& c : v) {
        if (!c.is_number()) continue;
        const double x = c.get<double>() * scale;
        const double r = std::round(x);
        if (std::abs(x - r) > 1e-9 * std::max(1.0, std::abs(x)) || std::abs(r) > static_cast<double>(kCoordLimit)) {
          throw ParseError("tree " + std::to_string(t) + ": coordinate " + c.dump() + " is not an integer in range after scaling by " +
                           json(scale).dump());
        }
        c = static_cast<std::int64_t>(r);
      }
    }
  }
}

}  // namespace

Instance parse_instance(const std::string& text) { return instance_from_json(parse_json(text)); }

Instance parse_instance_scaled(const std::string& text, double scale) {
  json doc = parse_json(text);
  scale_coordinates(doc, scale);
  return instance_from_json(doc);
}

std::string serialize_instance(const Instance& inst) {
  json trees = json::array();
  for (const auto& t : inst.trees) {
    json verts = json::array();
    for (const Point& p : t.vertices) verts.push_back(point_json(p));
    json edges = json::array();
    for (auto [i, j] : t.edges) edges.push_back(json::array({i, j}));
    trees.push_back({{"vertices", verts}, {"edges", edges}});
  }
  return json{{"trees", trees}}.dump() + "\n";
}

std::string serialize_cover(const Cover& cover, const std::string& phi, const std::vector<ShotRecord>& rays) {
  json regions = json::array();
  for (const Region& r : cover.regions) {
    if (const auto* p = std::get_if<ConvexPolygon>(&r)) {
      json verts = json::array();
      for (const Point& v : p->vertices()) verts.push_back(point_json(v));
      regions.push_back({{"vertices", verts}});
    } else if (const auto* b = std::get_if<AABB>(&r)) {
      regions.push_back({{"box", json::array({b->xmin, b->ymin, b->xmax, b->ymax})}});
    } else {
      const Circle& c = std::get<Circle>(r);
      regions.push_back({{"circle", json::array({c.cx, c.cy, c.r})}});
    }
  }
  json doc = {{"phi", phi}, {"regions", regions}, {"membership", cover.membership}};
  if (!rays.empty()) {
    json arr = json::array();
    for (const ShotRecord& s : rays) {
      const std::string d = "/" + to_string(s.end.den);
      arr.push_back({{"from", point_json(s.origin)},
                     {"to", json::array({s.end.x(), s.end.y()})},
                     {"to_exact", json::array({to_string(s.end.xn) + d, to_string(s.end.yn) + d})},
                     {"merge", s.merged}});
    }
    doc["rays"] = arr;
  }
  return doc.dump() + "\n";
}

CoverDocument parse_cover(const std::string& text) {
  const json doc = parse_json(text);
  CoverDocument out;
  const json& phi = member(doc, "phi", "cover");
  if (!phi.is_string()) throw ParseError("cover: \"phi\" must be a string");
  out.phi = phi.get<std::string>();
  const json& regions = member(doc, "regions", "cover");
  const json& membership = member(doc, "membership", "cover");
  if (!regions.is_array() || !membership.is_array() || regions.size() != membership.size()) {
    throw ParseError("cover: \"regions\" and \"membership\" must be arrays of equal length");
  }
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const std::string where = "region " + std::to_string(i);
    const json& r = regions[i];
    if (r.contains("vertices")) {
      std::vector<Point> v;
      for (const json& p : r["vertices"]) v.push_back(as_point(p, where));
      try {
        out.cover.regions.emplace_back(ConvexPolygon(std::move(v)));
      } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
      }
    } else if (r.contains("box")) {
      const json& b = r["box"];
      if (!b.is_array() || b.size() != 4) throw ParseError(where + ": box must be [xmin,ymin,xmax,ymax]");
      out.cover.regions.emplace_back(AABB{as_int(b[0], where), as_int(b[1], where), as_int(b[2], where), as_int(b[3], where)});
    } else if (r.contains("circle")) {
      const json& c = r["circle"];
      if (!c.is_array() || c.size() != 3) throw ParseError(where + ": circle must be [cx,cy,r]");
      out.cover.regions.emplace_back(Circle{c[0].get<double>(), c[1].get<double>(), c[2].get<double>()});
    } else {
      throw ParseError(where + ": unknown region kind");
    }
    std::vector<int> members;
    for (const json& t : membership[i]) members.push_back(static_cast<int>(as_int(t, where + " membership")));
    out.cover.membership.push_back(std::move(members));
  }
  if (doc.contains("rays")) {
    for (const json& r : doc["rays"]) {
      ShotRecord s;
      s.origin = as_point(r.at("from"), "ray");
      // Drawing only needs the float endpoint, re-encoded at 2^-20 resolution.
      const auto& to = r.at("to");
      const double x = to[0].get<double>(), y = to[1].get<double>();
      constexpr i128 kScale = 1 << 20;
      s.end = RationalPoint(static_cast<i128>(std::llround(x * kScale)), static_cast<i128>(std::llround(y * kScale)), kScale);
      s.merged = r.value("merge", false);
      out.rays.push_back(s);
    }
  }
  return out;
}

}  // namespace phicov
