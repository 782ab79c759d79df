// Fast box cover over a dynamic index of axis-aligned box boundaries.
#pragma once

#include "phicov/model.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace phicov {

// Boundary of a box as stored: one zero-length segment for a point box, one
// segment for a flat box, otherwise its four sides.
std::vector<Segment> boundary_segments(const AABB& b);

// True if some boundary segment of `b` meets the closed rectangle `r`.
bool boundary_meets(const AABB& b, const AABB& r);

class SegmentRangeIndex {
 public:
  virtual ~SegmentRangeIndex() = default;
  virtual void insert_box(int id, const AABB& box) = 0;
  virtual void delete_box(int id) = 0;
  // Ids (ascending) of stored boxes with a boundary segment meeting `rect`.
  virtual std::vector<int> query(const AABB& rect) = 0;
};

class ScanRangeIndex final : public SegmentRangeIndex {
 public:
  void insert_box(int id, const AABB& box) override;
  void delete_box(int id) override;
  std::vector<int> query(const AABB& rect) override;

 private:
  std::unordered_map<int, AABB> boxes_;
};

// Uniform grid of cells; each box is listed in the cells its boundary
// crosses. Boxes not inside `bounds` go to an overflow list.
class GridRangeIndex final : public SegmentRangeIndex {
 public:
  GridRangeIndex(const AABB& bounds, int cells_per_side);

  void insert_box(int id, const AABB& box) override;
  void delete_box(int id) override;
  std::vector<int> query(const AABB& rect) override;

 private:
  int col(std::int64_t x) const;
  int row(std::int64_t y) const;

  AABB bounds_;
  int n_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> overflow_;
  std::unordered_map<int, AABB> live_;
  std::unordered_map<int, std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

enum class IndexKind { scan, grid };

std::unique_ptr<SegmentRangeIndex> make_range_index(IndexKind kind, const AABB& bounds, std::size_t expected_boxes);

struct BoxStats {
  std::uint64_t queries = 0;
  std::uint64_t merges = 0;
  std::uint64_t inserts = 0;
  std::uint64_t deletes = 0;
  // Most queries issued for a single input tree.
  std::uint64_t max_rounds = 0;
};

std::string serialize_stats(const BoxStats& s);

struct BoxCoverResult {
  Cover cover;
  BoxStats stats;
  // Per box id (ids are assigned in insertion order).
  std::vector<int> insert_count;
  std::vector<int> delete_count;
};

BoxCoverResult box_cover_fast(const Instance& inst, IndexKind index = IndexKind::grid);

// Indices of boxes not strictly contained in another. Boxes must have
// pairwise disjoint boundaries.
std::vector<int> maximal_boxes(std::span<const AABB> boxes);
std::vector<int> maximal_box_containers(std::span<const AABB> boxes);

}  // namespace phicov
