// Fast hull cover: permanent-ray shooting over tree edges, union-find over
// components, and extraction of the outermost hulls.
#pragma once

#include "phicov/model.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phicov {

// A segment obstacle runs from `a` towards the integer point `through` and
// stops at `tip` = a + s_tip·(through − a), 0 < s_tip <= 1. Tree edges and
// unobstructed shots have s_tip = 1; a ray that hit something ends at the
// hit point. A point obstacle has a == through.
struct Obstacle {
  Point a;
  Point through;
  Rational s_tip{1};
  RationalPoint tip;
  int owner = -1;

  static Obstacle segment(const Point& a, const Point& b, int owner) { return {a, b, Rational{1}, b, owner}; }
  static Obstacle point(const Point& p, int owner) { return {p, p, Rational{1}, p, owner}; }
  bool is_point() const { return a == through; }
  bool full() const { return tip == RationalPoint(through); }
};

struct Hit {
  Rational t;  // origin + t·(through − origin)
  RationalPoint point;
  int obstacle = -1;
  int owner = -1;  // owner handle stored with the obstacle
};

// Intersection of the ray origin + t·(through − origin), t > 0, with one
// obstacle. A collinear obstacle is hit at its nearer end; one that
// contains the origin is ignored.
std::optional<Hit> ray_hit(const Point& origin, const Point& through, const Obstacle& ob, int id);

struct ShotOptions {
  // Only hits with t <= 1, i.e. on the closed segment [origin, through].
  bool up_to_through = false;
  // Obstacles whose owner is accepted are ignored.
  std::function<bool(int owner)> skip;
};

class RayShooter {
 public:
  virtual ~RayShooter() = default;

  virtual int insert_obstacle(const Obstacle& ob) = 0;
  // First hit (smallest t, then lowest obstacle id), or nullopt if the ray escapes.
  virtual std::optional<Hit> shoot(const Point& origin, const Point& through, const ShotOptions& opt = {}) = 0;

  // Shoots and inserts [origin, hit point] as an obstacle owned by `owner`.
  // Nothing is inserted when the ray escapes.
  std::optional<Hit> shoot_and_insert(const Point& origin, const Point& through, int owner);

  const Obstacle& obstacle(int id) const { return obstacles_[static_cast<std::size_t>(id)]; }
  std::size_t size() const { return obstacles_.size(); }

 protected:
  int store(const Obstacle& ob);
  std::vector<Obstacle> obstacles_;
};

// Tests every obstacle on every shot.
class ScanShooter final : public RayShooter {
 public:
  int insert_obstacle(const Obstacle& ob) override { return store(ob); }
  std::optional<Hit> shoot(const Point& origin, const Point& through, const ShotOptions& opt = {}) override;
};

// Uniform grid over `bounds`. Obstacles are registered in every cell they
// might touch (floating point, conservatively widened) and tested exactly;
// obstacles reaching outside `bounds` live in an overflow list that every
// shot scans.
class GridShooter final : public RayShooter {
 public:
  GridShooter(const AABB& bounds, int cells_per_side);

  int insert_obstacle(const Obstacle& ob) override;
  std::optional<Hit> shoot(const Point& origin, const Point& through, const ShotOptions& opt = {}) override;

 private:
  struct Axis {
    double lo = 0, size = 1;
    int n = 1;
    int cell(double v) const;
  };

  // Calls f(cell, x_major, step, slab_lo, slab_hi) for every cell a segment
  // from p to q may touch, slab by slab along the major axis.
  template <class F>
  void cells_along(double px, double py, double qx, double qy, F&& f) const;
  bool inside(const RationalPoint& p) const;

  AABB bounds_;
  Axis xs_, ys_;
  double eps_;
  std::vector<std::vector<int>> cells_;
  std::vector<int> overflow_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

enum class ShooterKind { scan, grid };

std::unique_ptr<RayShooter> make_shooter(ShooterKind kind, const AABB& bounds, std::size_t expected_obstacles);

// Union-find over components, each carrying its hull and a generation
// counter that advances on every union.
class ComponentSet {
 public:
  int make(ConvexPolygon hull);
  int find(int x);
  // Unites the components of a and b; `merged` becomes the hull of the
  // result. Returns the new root.
  int unite(int a, int b, ConvexPolygon merged);

  const ConvexPolygon& hull(int root) const { return hull_[static_cast<std::size_t>(root)]; }
  std::uint64_t generation(int root) const { return gen_[static_cast<std::size_t>(root)]; }
  int count() const { return count_; }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<ConvexPolygon> hull_;
  std::vector<std::uint64_t> gen_;
  int count_ = 0;
};

struct HullStats {
  std::uint64_t rays_shot = 0;
  std::uint64_t merges = 0;
  std::uint64_t initial_edges = 0;
  std::uint64_t stale_skipped = 0;
};

std::string serialize_stats(const HullStats& s);

struct HullCoverOptions {
  ShooterKind shooter = ShooterKind::grid;
  // Brute-force checks of the engine invariants after every shot.
  bool check_invariants = false;
  bool record_trace = false;
};

struct HullCoverResult {
  Cover cover;
  HullStats stats;
  std::vector<ShotRecord> trace;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

HullCoverResult hull_cover_fast(const Instance& inst, const HullCoverOptions& opt = {});

// Indices of the polygons not contained in any other. Polygons must be
// pairwise disjoint or nested, boundaries touching in at most two points.
std::vector<int> maximal_regions(std::span<const ConvexPolygon> polys);

// For each polygon: -1 if it is maximal, else the index of the maximal
// polygon containing it.
std::vector<int> maximal_containers(std::span<const ConvexPolygon> polys);

// No shared vertex and at most two boundary intersection points.
bool weakly_disjoint(const ConvexPolygon& p, const ConvexPolygon& q);

}  // namespace phicov
