#include "phicov/phi.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace phicov {

namespace {

// Live roots plus the set of intersecting live pairs, updated after every
// merge by testing the new root against the others.
class NaiveEngine {
 public:
  NaiveEngine(const Instance& inst, const PhiFunction& phi) : phi_(phi) {
    const int m = static_cast<int>(inst.m());
    for (int i = 0; i < m; ++i) {
      forest_.nodes.push_back({phi.apply(inst.trees[i].vertices), -1, -1, i});
      live_.push_back(1);
    }
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (test(i, j)) add_pair(i, j);
      }
    }
    for (int i = 0; i < m; ++i) roots_.push_back(i);
  }

  bool is_live(int id) const { return id >= 0 && id < static_cast<int>(live_.size()) && live_[id]; }
  bool test(int a, int b) {
    ++tests_;
    return phi_.intersect(forest_.nodes[a].value, forest_.nodes[b].value);
  }

  std::optional<std::pair<int, int>> first_found() {
    while (!ordered_.empty()) {
      const auto p = *ordered_.begin();
      if (is_live(p.first) && is_live(p.second)) return p;
      ordered_.erase(ordered_.begin());
    }
    return std::nullopt;
  }

  std::optional<std::pair<int, int>> random_pair(std::mt19937_64& rng) {
    // Dead entries are dropped on sight; rejection keeps the choice uniform
    // over live pairs.
    while (!pool_.empty()) {
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, pool_.size() - 1)(rng);
      const auto p = pool_[i];
      if (is_live(p.first) && is_live(p.second)) return p;
      pool_[i] = pool_.back();
      pool_.pop_back();
    }
    return std::nullopt;
  }

  // All live intersecting pairs, sorted.
  std::vector<std::pair<int, int>> live_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : ordered_) {
      if (is_live(p.first) && is_live(p.second)) out.push_back(p);
    }
    return out;
  }

  void merge(int a, int b) {
    const int c = static_cast<int>(forest_.nodes.size());
    forest_.nodes.push_back({phi_.merge(forest_.nodes[a].value, forest_.nodes[b].value), a, b, -1});
    live_[a] = live_[b] = 0;
    live_.push_back(1);
    merges_.emplace_back(a, b);
    std::erase_if(roots_, [&](int r) { return r == a || r == b; });
    for (int r : roots_) {
      if (test(r, c)) add_pair(r, c);
    }
    roots_.push_back(c);
  }

  NaiveResult finish() && {
    NaiveResult out;
    std::sort(roots_.begin(), roots_.end());
    forest_.roots = roots_;
    for (int r : roots_) {
      out.cover.regions.push_back(forest_.nodes[r].value);
      out.cover.membership.push_back(forest_.leaves_under(r));
    }
    out.forest = std::move(forest_);
    out.merges = std::move(merges_);
    out.intersection_tests = tests_;
    return out;
  }

 private:
  void add_pair(int a, int b) {
    ordered_.emplace(a, b);
    pool_.emplace_back(a, b);
  }

  const PhiFunction& phi_;
  MergeForest forest_;
  std::vector<char> live_;
  std::vector<int> roots_;
  std::set<std::pair<int, int>> ordered_;
  std::vector<std::pair<int, int>> pool_;
  std::vector<std::pair<int, int>> merges_;
  std::uint64_t tests_ = 0;
};

void explore(const NaiveEngine& state, std::vector<std::pair<int, int>>& script,
             std::vector<std::pair<Cover, std::vector<std::pair<int, int>>>>& found, int& runs, double eps) {
  const auto pairs = state.live_pairs();
  if (pairs.empty()) {
    ++runs;
    NaiveEngine copy = state;
    Cover c = canonical(std::move(copy).finish().cover);
    const bool seen = std::any_of(found.begin(), found.end(), [&](const auto& f) { return covers_equal(f.first, c, eps); });
    if (!seen) found.emplace_back(std::move(c), script);
    return;
  }
  for (const auto& [a, b] : pairs) {
    NaiveEngine next = state;
    next.merge(a, b);
    script.emplace_back(a, b);
    explore(next, script, found, runs, eps);
    script.pop_back();
  }
}

}  // namespace

NaiveResult naive_phi_cover(const Instance& inst, const PhiFunction& phi, const MergePolicy& policy) {
  NaiveEngine engine(inst, phi);
  std::mt19937_64 rng(policy.seed);
  std::size_t step = 0;
  while (true) {
    std::optional<std::pair<int, int>> pick;
    if (policy.strategy == MergePolicy::Strategy::scripted && step < policy.script.size()) {
      const auto [a, b] = policy.script[step++];
      if (a == b || !engine.is_live(a) || !engine.is_live(b) || !engine.test(a, b)) {
        throw std::invalid_argument("scripted merge " + std::to_string(a) + "+" + std::to_string(b) +
                                    " does not name two live intersecting roots");
      }
      pick = std::make_pair(a, b);
    } else if (policy.strategy == MergePolicy::Strategy::random) {
      pick = engine.random_pair(rng);
    } else {
      // first-found, and the tail of an exhausted script
      pick = engine.first_found();
    }
    if (!pick) break;
    engine.merge(pick->first, pick->second);
  }
  return std::move(engine).finish();
}

WellDefinedVerdict check_well_defined(const Instance& inst, const PhiFunction& phi, int trials, std::uint64_t seed,
                                      bool exhaustive) {
  const double eps = phi.eps();
  WellDefinedVerdict verdict;
  if (exhaustive) {
    if (inst.m() > static_cast<std::size_t>(kMaxExhaustiveTrees)) {
      throw std::invalid_argument("exhaustive enumeration needs at most " + std::to_string(kMaxExhaustiveTrees) +
                                  " trees, got " + std::to_string(inst.m()));
    }
    std::vector<std::pair<Cover, std::vector<std::pair<int, int>>>> found;
    std::vector<std::pair<int, int>> script;
    explore(NaiveEngine(inst, phi), script, found, verdict.runs, eps);
    if (found.size() > 1) {
      verdict.well_defined = false;
      verdict.witness = WellDefinedWitness{MergePolicy::scripted(found[0].second), found[0].first,
                                           MergePolicy::scripted(found[1].second), found[1].first};
    }
    return verdict;
  }

  if (trials < 2) throw std::invalid_argument("need at least 2 trials");
  const NaiveResult base = naive_phi_cover(inst, phi, MergePolicy::first_found());
  const Cover base_cover = canonical(base.cover);
  verdict.runs = 1;
  for (int i = 0; i < trials; ++i) {
    NaiveResult r = naive_phi_cover(inst, phi, MergePolicy::random(seed + static_cast<std::uint64_t>(i)));
    ++verdict.runs;
    Cover c = canonical(std::move(r.cover));
    if (!covers_equal(base_cover, c, eps)) {
      verdict.well_defined = false;
      verdict.witness = WellDefinedWitness{MergePolicy::scripted(base.merges), base_cover, MergePolicy::scripted(r.merges),
                                           std::move(c)};
      break;
    }
  }
  return verdict;
}

PointSetSampler uniform_point_sets(int max_size, std::int64_t range) {
  return [max_size, range](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(1, max_size);
    std::uniform_int_distribution<std::int64_t> coord(-range, range);
    std::vector<Point> pts(static_cast<std::size_t>(size(rng)));
    for (Point& p : pts) p = {coord(rng), coord(rng)};
    return pts;
  };
}

namespace {

bool point_in_region(const PhiFunction& phi, const Region& r, const Point& p) {
  switch (phi.kind()) {
    case PhiKind::hull: return point_in_convex_polygon(p, std::get<ConvexPolygon>(r)) != Location::outside;
    case PhiKind::box: return box_contains(std::get<AABB>(r), p);
    case PhiKind::mincircle:
      return circle_contains(std::get<Circle>(r), static_cast<double>(p.x), static_cast<double>(p.y), phi.eps());
  }
  return false;
}

// Up to 8 integer points inside `region`, drawn from B and from its bounding box.
std::vector<Point> sample_inside(const PhiFunction& phi, const Region& region, const std::vector<Point>& b,
                                 std::mt19937_64& rng) {
  const AABB box = box_of(b);
  std::uniform_int_distribution<std::int64_t> xs(box.xmin, box.xmax), ys(box.ymin, box.ymax);
  const int want = std::uniform_int_distribution<int>(1, 8)(rng);
  std::vector<Point> a;
  for (int attempt = 0; attempt < 1000 && static_cast<int>(a.size()) < want; ++attempt) {
    Point p;
    if (attempt % 3 == 0) {
      p = b[std::uniform_int_distribution<std::size_t>(0, b.size() - 1)(rng)];
    } else {
      p = {xs(rng), ys(rng)};
    }
    if (point_in_region(phi, region, p)) a.push_back(p);
  }
  if (a.empty()) a.push_back(b.front());
  return a;
}

}  // namespace

PropertyReport check_phi_properties(const PhiFunction& phi, const PropertySampler& sampler, int samples,
                                    std::uint64_t seed) {
  PropertyReport rep;
  std::mt19937_64 rng(seed);

  auto check_pair = [&](const std::vector<Point>& a, const std::vector<Point>& b) {
    const Region fb = phi.apply(b);
    const Region fa = phi.apply(a);
    if (phi.contains(fb, fa)) return;
    if (!rep.property2) return;  // keep the first witness
    rep.property2 = false;
    rep.witness_a = a;
    rep.witness_b = b;
    if (phi.kind() == PhiKind::mincircle) {
      const Circle& ca = std::get<Circle>(fa);
      const Circle& cb = std::get<Circle>(fb);
      rep.reach = std::hypot(ca.cx - cb.cx, ca.cy - cb.cy) + ca.r;
      rep.radius = cb.r;
    }
  };

  for (const auto& [a, b] : sampler.fixed_pairs) {
    check_pair(a, b);
    ++rep.samples;
  }
  for (int s = 0; s < samples; ++s) {
    const std::vector<Point> b = sampler.sets(rng);
    const Region fb = phi.apply(b);
    for (const Point& p : b) {
      if (!point_in_region(phi, fb, p) && rep.property1) {
        rep.property1 = false;
        rep.property1_witness = b;
      }
    }
    check_pair(sample_inside(phi, fb, b, rng), b);
    ++rep.samples;
  }
  return rep;
}

}  // namespace phicov
