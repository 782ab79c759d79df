// φ functions, the naive merge-fixpoint cover with its merge forest, and the
// well-definedness / property checkers.
#pragma once

#include "phicov/model.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace phicov {

enum class PhiKind { hull, box, mincircle };

PhiKind parse_phi_kind(const std::string& s);
std::string phi_kind_name(PhiKind k);

// apply / intersect / merge over Region values. Hull and box are exact;
// mincircle works in floating point with tolerance `eps`.
class PhiFunction {
 public:
  explicit PhiFunction(PhiKind kind, double eps = kCircleEps) : kind_(kind), eps_(eps) {}

  PhiKind kind() const { return kind_; }
  std::string name() const { return phi_kind_name(kind_); }
  double eps() const { return eps_; }

  Region apply(std::span<const Point> points) const;
  bool intersect(const Region& a, const Region& b) const;
  Region merge(const Region& a, const Region& b) const;
  // a ⊆ b (vertex containment for hull/box, eps-tolerant for circles).
  bool contains(const Region& outer, const Region& inner) const;

 private:
  PhiKind kind_;
  double eps_;
};

struct MergeNode {
  Region value;
  int left = -1;   // children: both -1 for a leaf
  int right = -1;
  int leaf = -1;   // input tree index for leaves
};

// Leaves are nodes 0..m-1 (one per tree, in input order); each merge
// appends one internal node.
struct MergeForest {
  std::vector<MergeNode> nodes;
  std::vector<int> roots;

  std::vector<int> leaves_under(int node) const;
};

std::string serialize_forest(const MergeForest& forest, const PhiFunction& phi);

struct MergePolicy {
  enum class Strategy { first_found, random, scripted };
  Strategy strategy = Strategy::first_found;
  std::uint64_t seed = 0;
  // Node-id pairs for the scripted strategy.
  std::vector<std::pair<int, int>> script;

  static MergePolicy first_found() { return {}; }
  static MergePolicy random(std::uint64_t seed) { return {Strategy::random, seed, {}}; }
  static MergePolicy scripted(std::vector<std::pair<int, int>> s) { return {Strategy::scripted, 0, std::move(s)}; }

  std::string describe() const;
};

struct NaiveResult {
  Cover cover;
  MergeForest forest;
  std::vector<std::pair<int, int>> merges;  // node-id pairs in merge order
  std::uint64_t intersection_tests = 0;
};

// Repeatedly merges two intersecting roots (chosen by `policy`) until the
// roots are pairwise disjoint. Throws std::invalid_argument if a scripted
// choice is not a pair of live intersecting roots.
NaiveResult naive_phi_cover(const Instance& inst, const PhiFunction& phi, const MergePolicy& policy);

struct WellDefinedWitness {
  MergePolicy policy1;
  Cover cover1;
  MergePolicy policy2;
  Cover cover2;
};

struct WellDefinedVerdict {
  bool well_defined = true;
  int runs = 0;  // merge orders tried
  std::optional<WellDefinedWitness> witness;
};

inline constexpr int kMaxExhaustiveTrees = 6;

// Non-exhaustive: first-found plus `trials` random policies. Exhaustive:
// every merge order (m <= kMaxExhaustiveTrees, else std::invalid_argument).
// Witness policies are always scripted with the merge order actually taken.
WellDefinedVerdict check_well_defined(const Instance& inst, const PhiFunction& phi, int trials, std::uint64_t seed,
                                      bool exhaustive = false);

// --- Properties 1 and 2 -------------------------------------------------------

using PointSetSampler = std::function<std::vector<Point>(std::mt19937_64&)>;

// Random set of 1..max_size points in [-range, range]^2.
PointSetSampler uniform_point_sets(int max_size, std::int64_t range);

struct PropertySampler {
  PointSetSampler sets;
  // (A, B) pairs checked for Property 2 before any random sample.
  std::vector<std::pair<std::vector<Point>, std::vector<Point>>> fixed_pairs;
};

struct PropertyReport {
  bool property1 = true;
  std::vector<Point> property1_witness;

  bool property2 = true;
  std::vector<Point> witness_a;  // A ⊆ φ(B) but φ(A) ⊄ φ(B)
  std::vector<Point> witness_b;
  // For circles: farthest reach of φ(A) from φ(B)'s centre, and φ(B)'s radius.
  double reach = 0.0;
  double radius = 0.0;

  int samples = 0;
};

PropertyReport check_phi_properties(const PhiFunction& phi, const PropertySampler& sampler, int samples,
                                    std::uint64_t seed);

}  // namespace phicov
