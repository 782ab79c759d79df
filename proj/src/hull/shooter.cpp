#include "phicov/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phicov {

namespace {

i128 cross(i128 ax, i128 ay, i128 bx, i128 by) { return ax * by - ay * bx; }

RationalPoint point_at(const Point& o, i128 dx, i128 dy, i128 tn, i128 td) {
  return {o.x * td + tn * dx, o.y * td + tn * dy, td};
}

}  // namespace

std::optional<Hit> ray_hit(const Point& origin, const Point& through, const Obstacle& ob, int id) {
  const i128 dx = through.x - origin.x, dy = through.y - origin.y;
  const i128 wx = ob.a.x - origin.x, wy = ob.a.y - origin.y;
  const i128 dd = dx * dx + dy * dy;

  if (ob.is_point()) {
    const i128 dot = wx * dx + wy * dy;
    if (cross(dx, dy, wx, wy) != 0 || dot <= 0) return std::nullopt;
    return Hit{Rational(to_big(dot), to_big(dd)), ob.a, id, ob.owner};
  }

  const i128 ex = ob.through.x - ob.a.x, ey = ob.through.y - ob.a.y;
  i128 den = cross(dx, dy, ex, ey);
  if (den != 0) {
    i128 tn = cross(wx, wy, ex, ey);
    i128 sn = cross(wx, wy, dx, dy);
    if (den < 0) {
      den = -den;
      tn = -tn;
      sn = -sn;
    }
    if (tn <= 0 || sn < 0) return std::nullopt;
    if (ob.full()) {
      if (sn > den) return std::nullopt;
    } else if (Rational(to_big(sn), to_big(den)) > ob.s_tip) {
      return std::nullopt;
    }
    return Hit{Rational(to_big(tn), to_big(den)), point_at(origin, dx, dy, tn, den), id, ob.owner};
  }
  if (cross(wx, wy, dx, dy) != 0) return std::nullopt;  // parallel, off the line

  // Collinear: parameters of both ends along the ray.
  const BigInt big_dd = to_big(dd);
  const Rational ta(to_big(wx * dx + wy * dy), big_dd);
  const BigInt edot = to_big(ex * dx + ey * dy);
  const Rational tt(ta.num() * ob.s_tip.den() + ob.s_tip.num() * edot, big_dd * ob.s_tip.den());
  const bool tip_first = tt < ta;
  const Rational& near = tip_first ? tt : ta;
  if (near.sign() <= 0) return std::nullopt;  // contains the origin or lies behind it
  return Hit{near, tip_first ? ob.tip : RationalPoint(ob.a), id, ob.owner};
}

int RayShooter::store(const Obstacle& ob) {
  obstacles_.push_back(ob);
  return static_cast<int>(obstacles_.size()) - 1;
}

std::optional<Hit> RayShooter::shoot_and_insert(const Point& origin, const Point& through, int owner) {
  std::optional<Hit> h = shoot(origin, through);
  if (h) insert_obstacle({origin, through, h->t, h->point, owner});
  return h;
}

namespace {

bool better(const Hit& h, const std::optional<Hit>& best) {
  if (!best) return true;
  const auto c = h.t <=> best->t;
  return c < 0 || (c == 0 && h.obstacle < best->obstacle);
}

// Applies the options to a candidate and keeps the best hit.
void consider(const Point& origin, const Point& through, const Obstacle& ob, int id, const ShotOptions& opt,
              std::optional<Hit>& best) {
  if (opt.skip && opt.skip(ob.owner)) return;
  std::optional<Hit> h = ray_hit(origin, through, ob, id);
  if (!h) return;
  if (opt.up_to_through && h->t > Rational(1)) return;
  if (better(*h, best)) best = std::move(h);
}

}  // namespace

std::optional<Hit> ScanShooter::shoot(const Point& origin, const Point& through, const ShotOptions& opt) {
  std::optional<Hit> best;
  for (std::size_t i = 0; i < obstacles_.size(); ++i) consider(origin, through, obstacles_[i], static_cast<int>(i), opt, best);
  return best;
}

// --- grid ---------------------------------------------------------------------

int GridShooter::Axis::cell(double v) const {
  const double c = std::floor((v - lo) / size);
  if (c < 0) return 0;
  if (c >= n) return n - 1;
  return static_cast<int>(c);
}

GridShooter::GridShooter(const AABB& bounds, int cells_per_side) : bounds_(bounds) {
  const int n = std::max(1, cells_per_side);
  const double w = static_cast<double>(bounds.xmax - bounds.xmin) + 1.0;
  const double h = static_cast<double>(bounds.ymax - bounds.ymin) + 1.0;
  xs_ = {static_cast<double>(bounds.xmin), w / n, n};
  ys_ = {static_cast<double>(bounds.ymin), h / n, n};
  // Rounding in the double walk is far below this for |c| <= 2^30.
  eps_ = 1e-3 + 1e-9 * std::max(w, h);
  cells_.resize(static_cast<std::size_t>(n) * n);
}

bool GridShooter::inside(const RationalPoint& p) const {
  const double x = p.x(), y = p.y();
  return x >= bounds_.xmin && x <= bounds_.xmax && y >= bounds_.ymin && y <= bounds_.ymax;
}

template <class F>
void GridShooter::cells_along(double px, double py, double qx, double qy, F&& f) const {
  // Walk along the major axis one slab of cells at a time; inside a slab
  // the segment spans a (widened) interval of the minor axis.
  const bool x_major = std::abs(qx - px) >= std::abs(qy - py);
  const Axis& major = x_major ? xs_ : ys_;
  const Axis& minor = x_major ? ys_ : xs_;
  const double u0 = x_major ? px : py, v0 = x_major ? py : px;
  const double u1 = x_major ? qx : qy, v1 = x_major ? qy : qx;
  const double du = u1 - u0;
  const int step = u1 >= u0 ? 1 : -1;
  const int first = major.cell(u0 - step * eps_), last = major.cell(u1 + step * eps_);
  for (int k = first;; k += step) {
    const double slab_lo = major.lo + k * major.size, slab_hi = slab_lo + major.size;
    double a = std::max(std::min(u0, u1), slab_lo), b = std::min(std::max(u0, u1), slab_hi);
    double va, vb;
    if (du == 0.0 || a > b) {
      va = std::min(v0, v1);
      vb = std::max(v0, v1);
    } else {
      va = v0 + (a - u0) / du * (v1 - v0);
      vb = v0 + (b - u0) / du * (v1 - v0);
      if (va > vb) std::swap(va, vb);
    }
    const int r0 = minor.cell(va - eps_), r1 = minor.cell(vb + eps_);
    for (int r = r0; r <= r1; ++r) {
      const int cx = x_major ? k : r, cy = x_major ? r : k;
      if (!f(static_cast<std::size_t>(cy) * xs_.n + cx, x_major, step, slab_lo, slab_hi)) return;
    }
    if (k == last) break;
  }
}

int GridShooter::insert_obstacle(const Obstacle& ob) {
  const int id = store(ob);
  stamp_.push_back(0);
  if (!inside(ob.a) || !inside(ob.tip)) {
    overflow_.push_back(id);
    return id;
  }
  cells_along(static_cast<double>(ob.a.x), static_cast<double>(ob.a.y), ob.tip.x(), ob.tip.y(),
              [&](std::size_t c, bool, int, double, double) {
                if (cells_[c].empty() || cells_[c].back() != id) cells_[c].push_back(id);
                return true;
              });
  return id;
}

std::optional<Hit> GridShooter::shoot(const Point& origin, const Point& through, const ShotOptions& opt) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  std::optional<Hit> best;
  for (int id : overflow_) consider(origin, through, obstacles_[static_cast<std::size_t>(id)], id, opt, best);

  // Clip the ray (or segment) to the grid box in floating point, widened.
  const double ox = static_cast<double>(origin.x), oy = static_cast<double>(origin.y);
  const double dx = static_cast<double>(through.x - origin.x), dy = static_cast<double>(through.y - origin.y);
  double t0 = 0.0, t1 = opt.up_to_through ? 1.0 : std::numeric_limits<double>::infinity();
  auto clip = [&](double o, double d, double lo, double hi) {
    if (d == 0.0) return o >= lo && o <= hi;
    double a = (lo - o) / d, b = (hi - o) / d;
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
    return t0 <= t1;
  };
  const double pad = eps_;
  if (!clip(ox, dx, bounds_.xmin - pad, bounds_.xmax + pad) || !clip(oy, dy, bounds_.ymin - pad, bounds_.ymax + pad)) {
    return best;
  }

  cells_along(ox + t0 * dx, oy + t0 * dy, ox + t1 * dx, oy + t1 * dy,
              [&](std::size_t c, bool x_major, int dir, double slab_lo, double slab_hi) {
    // Entering a new slab: stop if the best hit lies strictly inside the
    // slabs already walked, since later slabs only hold larger t.
    if (best) {
      const double u = x_major ? best->point.x() : best->point.y();
      if (dir > 0 ? u < slab_lo - eps_ : u > slab_hi + eps_) return false;
    }
    for (int id : cells_[c]) {
      if (stamp_[static_cast<std::size_t>(id)] == epoch_) continue;
      stamp_[static_cast<std::size_t>(id)] = epoch_;
      consider(origin, through, obstacles_[static_cast<std::size_t>(id)], id, opt, best);
    }
    return true;
  });
  return best;
}

std::unique_ptr<RayShooter> make_shooter(ShooterKind kind, const AABB& bounds, std::size_t expected_obstacles) {
  if (kind == ShooterKind::scan) return std::make_unique<ScanShooter>();
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(std::max<std::size_t>(expected_obstacles, 1)))));
  return std::make_unique<GridShooter>(bounds, std::clamp(side, 1, 4096));
}

}  // namespace phicov
