#include "phicov/box.hpp"

#include <algorithm>
#include <cmath>

namespace phicov {

std::vector<Segment> boundary_segments(const AABB& b) {
  const Point ll{b.xmin, b.ymin}, lr{b.xmax, b.ymin}, ur{b.xmax, b.ymax}, ul{b.xmin, b.ymax};
  if (b.xmin == b.xmax || b.ymin == b.ymax) return {{ll, ur}};
  return {{ll, lr}, {lr, ur}, {ur, ul}, {ul, ll}};
}

bool boundary_meets(const AABB& b, const AABB& r) {
  if (!boxes_intersect(b, r)) return false;
  // The closed boxes meet; only the boundary can miss r, when r sits in
  // the open interior of b.
  return !(b.xmin < r.xmin && r.xmax < b.xmax && b.ymin < r.ymin && r.ymax < b.ymax);
}

void ScanRangeIndex::insert_box(int id, const AABB& box) { boxes_[id] = box; }

void ScanRangeIndex::delete_box(int id) { boxes_.erase(id); }

std::vector<int> ScanRangeIndex::query(const AABB& rect) {
  std::vector<int> out;
  for (const auto& [id, box] : boxes_) {
    for (const Segment& s : boundary_segments(box)) {
      const AABB seg{std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y), std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)};
      if (boxes_intersect(seg, rect)) {
        out.push_back(id);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GridRangeIndex::GridRangeIndex(const AABB& bounds, int cells_per_side)
    : bounds_(bounds), n_(std::max(1, cells_per_side)), cells_(static_cast<std::size_t>(n_) * n_) {}

int GridRangeIndex::col(std::int64_t x) const {
  const i128 w = static_cast<i128>(bounds_.xmax - bounds_.xmin) + 1;
  const i128 c = static_cast<i128>(std::clamp(x, bounds_.xmin, bounds_.xmax) - bounds_.xmin) * n_ / w;
  return static_cast<int>(c);
}

int GridRangeIndex::row(std::int64_t y) const {
  const i128 h = static_cast<i128>(bounds_.ymax - bounds_.ymin) + 1;
  const i128 r = static_cast<i128>(std::clamp(y, bounds_.ymin, bounds_.ymax) - bounds_.ymin) * n_ / h;
  return static_cast<int>(r);
}

void GridRangeIndex::insert_box(int id, const AABB& box) {
  live_[id] = box;
  stamp_[id] = 0;
  if (!box_contains(bounds_, box)) {
    overflow_.push_back(id);
    return;
  }
  for (const Segment& s : boundary_segments(box)) {
    const int c0 = col(std::min(s.a.x, s.b.x)), c1 = col(std::max(s.a.x, s.b.x));
    const int r0 = row(std::min(s.a.y, s.b.y)), r1 = row(std::max(s.a.y, s.b.y));
    // Sides are axis-parallel (a flat box's diagonal is one too), so this
    // is a single row or column of cells.
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        auto& cell = cells_[static_cast<std::size_t>(r) * n_ + c];
        if (cell.empty() || cell.back() != id) cell.push_back(id);
      }
    }
  }
}

void GridRangeIndex::delete_box(int id) {
  // Cell lists are cleaned lazily by query.
  live_.erase(id);
  stamp_.erase(id);
  std::erase(overflow_, id);
}

std::vector<int> GridRangeIndex::query(const AABB& rect) {
  ++epoch_;
  std::vector<int> out;
  auto test = [&](int id) {
    const auto it = live_.find(id);
    if (it == live_.end()) return;
    std::uint32_t& s = stamp_[id];
    if (s == epoch_) return;
    s = epoch_;
    if (boundary_meets(it->second, rect)) out.push_back(id);
  };
  for (int id : overflow_) test(id);
  if (boxes_intersect(rect, bounds_)) {
    const int c0 = col(rect.xmin), c1 = col(rect.xmax), r0 = row(rect.ymin), r1 = row(rect.ymax);
    for (int r = r0; r <= r1; ++r) {
      for (int c = c0; c <= c1; ++c) {
        auto& cell = cells_[static_cast<std::size_t>(r) * n_ + c];
        std::erase_if(cell, [&](int id) { return !live_.count(id); });
        for (int id : cell) test(id);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::unique_ptr<SegmentRangeIndex> make_range_index(IndexKind kind, const AABB& bounds, std::size_t expected_boxes) {
  if (kind == IndexKind::scan) return std::make_unique<ScanRangeIndex>();
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(expected_boxes, 1)))));
  return std::make_unique<GridRangeIndex>(bounds, std::clamp(side, 1, 4096));
}

}  // namespace phicov
