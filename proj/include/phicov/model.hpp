// Input forests, covers, the JSON wire formats, validation and instance
// generators.
#pragma once

#include "phicov/geom.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace phicov {

struct GeometricTree {
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> edges;

  std::vector<Segment> segments() const;

  friend bool operator==(const GeometricTree&, const GeometricTree&) = default;
};

struct Instance {
  std::vector<GeometricTree> trees;

  std::size_t m() const { return trees.size(); }
  std::size_t n() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

using Region = std::variant<ConvexPolygon, AABB, Circle>;

// Cover: pairwise disjoint regions, and for each region the sorted indices
// (0-based, into Instance::trees) of the trees it contains.
struct Cover {
  std::vector<Region> regions;
  std::vector<std::vector<int>> membership;
};

// Sorts regions and membership lists so that equal covers compare equal.
Cover canonical(Cover c);

// Exact structural equality of canonical forms; circle regions compare
// within `circle_eps`.
bool covers_equal(const Cover& a, const Cover& b, double circle_eps = kCircleEps);

std::string describe(const Region& r);

// --- wire format ------------------------------------------------------------

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"trees":[{"vertices":[[x,y],...],"edges":[[i,j],...]},...]}
Instance parse_instance(const std::string& text);
// Same, after multiplying every coordinate by `scale` (decimal inputs must
// become integers).
Instance parse_instance_scaled(const std::string& text, double scale);
std::string serialize_instance(const Instance& inst);

// One shot of the hull-cover engine, kept for rendering.
struct ShotRecord {
  Point origin;
  RationalPoint end;
  bool merged = false;
};

struct CoverDocument {
  std::string phi;
  Cover cover;
  std::vector<ShotRecord> rays;
};

// {"phi":"hull"|"box", "regions":[...], "membership":[[...],...]} plus an
// optional "rays" array when a shot trace is attached.
std::string serialize_cover(const Cover& cover, const std::string& phi, const std::vector<ShotRecord>& rays = {});
CoverDocument parse_cover(const std::string& text);

// --- validation -------------------------------------------------------------

enum class Rule {
  bad_edge_index,
  self_loop,
  duplicate_edge,
  edge_count,
  not_connected,
  duplicate_vertex,
  vertex_on_edge,
  self_crossing,
  trees_cross,
  shared_vertex,
  shared_coordinate,  // warning only
};

std::string rule_name(Rule r);

struct Violation {
  Rule rule;
  std::vector<int> trees;
  std::vector<Point> vertices;
  std::vector<std::pair<int, int>> edges;  // (tree, edge index)
  std::string message;
  bool warning = false;
};

// All violations of the forest invariants (errors and warnings). The
// instance is valid iff no returned violation is an error.
std::vector<Violation> validate_instance(const Instance& inst);
bool has_errors(const std::vector<Violation>& v);

// --- generators ---------------------------------------------------------------

enum class GenKind { strips, combs, nested, mincircle_gadget, scatter };

GenKind parse_gen_kind(const std::string& s);
std::string gen_kind_name(GenKind k);

struct GenParams {
  int trees = 3;             // m (number of rings for nested)
  int vertices_per_tree = 4;  // K
  std::int64_t range = 0;    // coordinate scale; 0 picks a kind-specific default
};

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Deterministic in (kind, params, seed). Every result passes
// validate_instance without errors.
Instance generate(GenKind kind, const GenParams& params, std::uint64_t seed);

}  // namespace phicov
