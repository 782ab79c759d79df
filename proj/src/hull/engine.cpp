#include "phicov/hull.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

namespace phicov {

int ComponentSet::make(ConvexPolygon hull) {
  const int id = static_cast<int>(parent_.size());
  parent_.push_back(id);
  rank_.push_back(0);
  hull_.push_back(std::move(hull));
  gen_.push_back(0);
  ++count_;
  return id;
}

int ComponentSet::find(int x) {
  int root = x;
  while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
  while (parent_[static_cast<std::size_t>(x)] != root) {
    const int next = parent_[static_cast<std::size_t>(x)];
    parent_[static_cast<std::size_t>(x)] = root;
    x = next;
  }
  return root;
}

int ComponentSet::unite(int a, int b, ConvexPolygon merged) {
  int ra = find(a), rb = find(b);
  if (ra == rb) throw std::logic_error("unite: already one component");
  if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
  if (rank_[ra] == rank_[rb]) ++rank_[ra];
  parent_[rb] = ra;
  gen_[ra] = std::max(gen_[ra], gen_[rb]) + 1;
  hull_[ra] = std::move(merged);
  hull_[rb] = ConvexPolygon();
  --count_;
  return ra;
}

std::string serialize_stats(const HullStats& s) {
  return nlohmann::json{{"rays_shot", s.rays_shot}, {"merges", s.merges}, {"initial_edges", s.initial_edges}}.dump() +
         "\n";
}

namespace {

struct EdgeKey {
  Point p, q;
  bool operator==(const EdgeKey&) const = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::int64_t v : {k.p.x, k.p.y, k.q.x, k.q.y}) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

enum class EdgeState { pending, verified };

struct Entry {
  Point p, q;
  int comp;
  std::uint64_t gen;
};

class HullEngine {
 public:
  HullEngine(const Instance& inst, const HullCoverOptions& opt) : inst_(inst), opt_(opt) {
    std::vector<Point> all;
    std::size_t edges = 0;
    for (const auto& t : inst.trees) {
      all.insert(all.end(), t.vertices.begin(), t.vertices.end());
      edges += t.edges.size();
    }
    shooter_ = make_shooter(opt.shooter, box_of(all), all.size() + edges);
    for (std::size_t i = 0; i < inst.m(); ++i) {
      const auto& t = inst.trees[i];
      comps_.make(convex_hull(t.vertices));
      const int owner = static_cast<int>(i);
      for (const Segment& s : t.segments()) shooter_->insert_obstacle(Obstacle::segment(s.a, s.b, owner));
      for (const Point& v : t.vertices) shooter_->insert_obstacle(Obstacle::point(v, owner));
    }
    for (int i = 0; i < comps_.size(); ++i) enqueue_hull(i);
    stats_.initial_edges = queue_.size();
  }

  HullCoverResult run() && {
    while (!queue_.empty()) {
      const Entry e = queue_.front();
      queue_.pop_front();
      const int r = comps_.find(e.comp);
      if (comps_.generation(r) != e.gen) {
        ++stats_.stale_skipped;
        continue;
      }
      if (state_[{e.p, e.q}] == EdgeState::verified) continue;
      shoot(e.p, e.q, r);
    }
    return finish();
  }

 private:
  void enqueue_hull(int root) {
    for (const Segment& s : comps_.hull(root).edges()) {
      auto [it, fresh] = state_.try_emplace({s.a, s.b}, EdgeState::pending);
      if (fresh || it->second == EdgeState::pending) queue_.push_back({s.a, s.b, root, comps_.generation(root)});
    }
  }

  void shoot(const Point& p, const Point& q, int r) {
    ++stats_.rays_shot;
    ShotOptions so;
    so.up_to_through = true;
    so.skip = [this, r](int owner) { return comps_.find(owner) == r; };
    const std::optional<Hit> hit = shooter_->shoot(p, q, so);
    if (!hit) {
      // Edge is clear of foreign obstacles up to q.
      shooter_->insert_obstacle(Obstacle::segment(p, q, r));
      state_[{p, q}] = EdgeState::verified;
      if (opt_.record_trace) trace_.push_back({p, q, false});
      return;
    }

    const int other = comps_.find(hit->owner);
    if (opt_.check_invariants) check_connecting_segment(p, q, *hit, r, other);
    const int ray = shooter_->insert_obstacle({p, q, hit->t, hit->point, r});
    ConvexPolygon merged = merge_convex_hulls(comps_.hull(r), comps_.hull(other));
    const int root = comps_.unite(r, other, std::move(merged));
    ++stats_.merges;
    if (opt_.record_trace) trace_.push_back({p, hit->point, true});
    if (opt_.check_invariants) {
      if (comps_.find(shooter_->obstacle(ray).owner) != comps_.find(shooter_->obstacle(hit->obstacle).owner)) {
        throw InvariantViolation("merging ray and hit obstacle ended in different components");
      }
      check_weak_disjointness();
    }
    // A blocked edge that is still on the merged hull must be shot again.
    state_[{p, q}] = EdgeState::pending;
    enqueue_hull(root);
  }

  void check_connecting_segment(const Point& p, const Point& q, const Hit& hit, int own, int other) {
    if (other == own) throw InvariantViolation("shot hit its own component");
    if (hit.t.sign() <= 0 || hit.t > Rational(1)) throw InvariantViolation("merge hit outside (0,1] along the edge");
    for (std::size_t id = 0; id < shooter_->size(); ++id) {
      const Obstacle& ob = shooter_->obstacle(static_cast<int>(id));
      const int c = comps_.find(ob.owner);
      if (c == own || c == other) continue;
      const auto h = ray_hit(p, q, ob, static_cast<int>(id));
      if (h && h->t <= hit.t) {
        throw InvariantViolation("connecting segment from " + to_string(p) + " meets a third component at " +
                                 to_string(h->point));
      }
    }
  }

  void check_weak_disjointness() {
    std::vector<int> roots;
    for (int i = 0; i < comps_.size(); ++i) {
      if (comps_.find(i) == i) roots.push_back(i);
    }
    auto check = [&](int a, int b) {
      if (!weakly_disjoint(comps_.hull(a), comps_.hull(b))) {
        throw InvariantViolation("live hulls " + describe(comps_.hull(a)) + " and " + describe(comps_.hull(b)) +
                                 " are not weakly disjoint");
      }
    };
    constexpr std::size_t kAllPairs = 40;
    if (roots.size() <= kAllPairs) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) check(roots[i], roots[j]);
      }
      return;
    }
    std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
    for (int s = 0; s < 400; ++s) {
      const std::size_t i = pick(rng_), j = pick(rng_);
      if (i != j) check(roots[i], roots[j]);
    }
  }

  HullCoverResult finish() {
    std::vector<int> roots;
    std::vector<int> region_of_root(static_cast<std::size_t>(comps_.size()), -1);
    std::vector<ConvexPolygon> hulls;
    for (int i = 0; i < comps_.size(); ++i) {
      if (comps_.find(i) != i) continue;
      region_of_root[static_cast<std::size_t>(i)] = static_cast<int>(roots.size());
      roots.push_back(i);
      hulls.push_back(comps_.hull(i));
    }
    const std::vector<int> container = maximal_containers(hulls);
    HullCoverResult out;
    std::vector<int> region_index(hulls.size(), -1);
    for (std::size_t k = 0; k < hulls.size(); ++k) {
      if (container[k] >= 0) continue;
      region_index[k] = static_cast<int>(out.cover.regions.size());
      out.cover.regions.emplace_back(hulls[k]);
      out.cover.membership.emplace_back();
    }
    for (std::size_t t = 0; t < inst_.m(); ++t) {
      const int k = region_of_root[static_cast<std::size_t>(comps_.find(static_cast<int>(t)))];
      const int top = container[static_cast<std::size_t>(k)] >= 0 ? container[static_cast<std::size_t>(k)] : k;
      out.cover.membership[static_cast<std::size_t>(region_index[static_cast<std::size_t>(top)])].push_back(static_cast<int>(t));
    }
    out.stats = stats_;
    out.trace = std::move(trace_);
    return out;
  }

  const Instance& inst_;
  HullCoverOptions opt_;
  std::unique_ptr<RayShooter> shooter_;
  ComponentSet comps_;
  std::unordered_map<EdgeKey, EdgeState, EdgeKeyHash> state_;
  std::deque<Entry> queue_;
  HullStats stats_;
  std::vector<ShotRecord> trace_;
  std::mt19937_64 rng_{0x5eed};
};

}  // namespace

HullCoverResult hull_cover_fast(const Instance& inst, const HullCoverOptions& opt) {
  return HullEngine(inst, opt).run();
}

}  // namespace phicov
