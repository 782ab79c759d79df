#include "phicov/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

namespace phicov {

std::vector<Segment> GeometricTree::segments() const {
  std::vector<Segment> out;
  out.reserve(edges.size());
  for (auto [i, j] : edges) out.push_back({vertices[i], vertices[j]});
  return out;
}

std::size_t Instance::n() const {
  std::size_t total = 0;
  for (const auto& t : trees) total += t.vertices.size();
  return total;
}

namespace {

bool region_less(const Region& a, const Region& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* p = std::get_if<ConvexPolygon>(&a)) return *p < std::get<ConvexPolygon>(b);
  if (const auto* p = std::get_if<AABB>(&a)) return *p < std::get<AABB>(b);
  const Circle& x = std::get<Circle>(a);
  const Circle& y = std::get<Circle>(b);
  return std::tie(x.cx, x.cy, x.r) < std::tie(y.cx, y.cy, y.r);
}

bool region_equal(const Region& a, const Region& b, double eps) {
  if (a.index() != b.index()) return false;
  if (const auto* c = std::get_if<Circle>(&a)) {
    const Circle& d = std::get<Circle>(b);
    return std::abs(c->cx - d.cx) <= eps && std::abs(c->cy - d.cy) <= eps && std::abs(c->r - d.r) <= eps;
  }
  return a == b;
}

}  // namespace

Cover canonical(Cover c) {
  for (auto& m : c.membership) std::sort(m.begin(), m.end());
  std::vector<std::size_t> order(c.regions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    if (region_less(c.regions[i], c.regions[j])) return true;
    if (region_less(c.regions[j], c.regions[i])) return false;
    return c.membership[i] < c.membership[j];
  });
  Cover out;
  out.regions.reserve(order.size());
  out.membership.reserve(order.size());
  for (std::size_t i : order) {
    out.regions.push_back(std::move(c.regions[i]));
    out.membership.push_back(std::move(c.membership[i]));
  }
  return out;
}

bool covers_equal(const Cover& a, const Cover& b, double circle_eps) {
  if (a.regions.size() != b.regions.size() || a.membership.size() != b.membership.size()) return false;
  // Pair up by membership so near-equal circles cannot be misaligned by a
  // floating point sort; for exact regions this is the same relation.
  auto by_members = [](const Cover& c) {
    std::vector<std::pair<std::vector<int>, const Region*>> v;
    for (std::size_t i = 0; i < c.regions.size(); ++i) {
      auto m = c.membership[i];
      std::sort(m.begin(), m.end());
      v.emplace_back(std::move(m), &c.regions[i]);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return v;
  };
  const auto x = by_members(a);
  const auto y = by_members(b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].first != y[i].first || !region_equal(*x[i].second, *y[i].second, circle_eps)) return false;
  }
  return true;
}

std::string describe(const Region& r) {
  std::ostringstream os;
  if (const auto* p = std::get_if<ConvexPolygon>(&r)) {
    os << "[";
    for (std::size_t i = 0; i < p->size(); ++i) os << (i ? "," : "") << to_string((*p)[i]);
    os << "]";
  } else if (const auto* b = std::get_if<AABB>(&r)) {
    os << to_string(*b);
  } else {
    const Circle& c = std::get<Circle>(r);
    os << "circle((" << c.cx << "," << c.cy << ")," << c.r << ")";
  }
  return os.str();
}

}  // namespace phicov
