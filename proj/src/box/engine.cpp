#include "phicov/box.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace phicov {

std::string serialize_stats(const BoxStats& s) {
  return nlohmann::json{{"queries", s.queries}, {"merges", s.merges}}.dump() + "\n";
}

BoxCoverResult box_cover_fast(const Instance& inst, IndexKind kind) {
  std::vector<Point> all;
  for (const auto& t : inst.trees) all.insert(all.end(), t.vertices.begin(), t.vertices.end());
  auto index = make_range_index(kind, box_of(all), inst.m());

  BoxCoverResult out;
  std::vector<AABB> box_of_id;
  std::vector<std::vector<int>> members_of_id;
  std::vector<char> alive;

  for (std::size_t t = 0; t < inst.m(); ++t) {
    AABB q = box_of(inst.trees[t].vertices);
    std::vector<int> members{static_cast<int>(t)};
    std::uint64_t rounds = 0;
    while (true) {
      const std::vector<int> hits = index->query(q);
      ++out.stats.queries;
      ++rounds;
      if (hits.empty()) break;
      for (int h : hits) {
        index->delete_box(h);
        ++out.delete_count[static_cast<std::size_t>(h)];
        ++out.stats.deletes;
        alive[static_cast<std::size_t>(h)] = 0;
        auto& m = members_of_id[static_cast<std::size_t>(h)];
        members.insert(members.end(), m.begin(), m.end());
        m.clear();
        q = box_union(q, box_of_id[static_cast<std::size_t>(h)]);
        ++out.stats.merges;
      }
    }
    out.stats.max_rounds = std::max(out.stats.max_rounds, rounds);
    const int id = static_cast<int>(box_of_id.size());
    box_of_id.push_back(q);
    members_of_id.push_back(std::move(members));
    alive.push_back(1);
    out.insert_count.push_back(1);
    out.delete_count.push_back(0);
    ++out.stats.inserts;
    index->insert_box(id, q);
  }

  std::vector<int> ids;
  std::vector<AABB> boxes;
  for (std::size_t i = 0; i < box_of_id.size(); ++i) {
    if (!alive[i]) continue;
    ids.push_back(static_cast<int>(i));
    boxes.push_back(box_of_id[i]);
  }
  const std::vector<int> container = maximal_box_containers(boxes);
  std::vector<int> region(boxes.size(), -1);
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    if (container[k] >= 0) continue;
    region[k] = static_cast<int>(out.cover.regions.size());
    out.cover.regions.emplace_back(boxes[k]);
    out.cover.membership.emplace_back();
  }
  for (std::size_t k = 0; k < boxes.size(); ++k) {
    const int top = container[k] >= 0 ? container[k] : static_cast<int>(k);
    auto& dst = out.cover.membership[static_cast<std::size_t>(region[static_cast<std::size_t>(top)])];
    const auto& src = members_of_id[static_cast<std::size_t>(ids[k])];
    dst.insert(dst.end(), src.begin(), src.end());
  }
  for (auto& m : out.cover.membership) std::sort(m.begin(), m.end());
  return out;
}

std::vector<int> maximal_box_containers(std::span<const AABB> boxes) {
  const std::size_t k = boxes.size();
  std::vector<int> container(k, -1);
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(boxes[a].xmin, boxes[a].ymin) < std::pair(boxes[b].xmin, boxes[b].ymin);
  });
  // Active maximal boxes keyed by ymin; at any sweep position their
  // y-intervals are disjoint, so only the predecessor can contain a box.
  std::map<std::int64_t, int> active;
  using Expiry = std::pair<std::int64_t, int>;
  std::priority_queue<Expiry, std::vector<Expiry>, std::greater<>> expiry;
  for (int i : order) {
    const AABB& b = boxes[static_cast<std::size_t>(i)];
    while (!expiry.empty() && expiry.top().first < b.xmin) {
      const int gone = expiry.top().second;
      expiry.pop();
      const auto it = active.find(boxes[static_cast<std::size_t>(gone)].ymin);
      if (it != active.end() && it->second == gone) active.erase(it);
    }
    auto it = active.upper_bound(b.ymin);
    if (it != active.begin()) {
      const int q = std::prev(it)->second;
      const AABB& c = boxes[static_cast<std::size_t>(q)];
      if (c.xmin < b.xmin && b.xmax < c.xmax && c.ymin < b.ymin && b.ymax < c.ymax) {
        container[static_cast<std::size_t>(i)] = q;
        continue;
      }
    }
    active[b.ymin] = i;
    expiry.emplace(b.xmax, i);
  }
  return container;
}

std::vector<int> maximal_boxes(std::span<const AABB> boxes) {
  const std::vector<int> c = maximal_box_containers(boxes);
  std::vector<int> out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace phicov
