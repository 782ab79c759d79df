#include "cli.hpp"

#include "phicov/box.hpp"
#include "phicov/hull.hpp"
#include "phicov/phi.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace phicov::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << data)) throw UsageError("cannot write " + path);
}

Instance load(const std::string& path, double scale) {
  const std::string text = read_file(path);
  return scale == 1.0 ? parse_instance(text) : parse_instance_scaled(text, scale);
}

// Prints violations; returns true if the instance may be used.
bool report_violations(const Instance& inst, std::ostream& err) {
  const auto v = validate_instance(inst);
  for (const Violation& x : v) err << (x.warning ? "warning" : "error") << ": [" << rule_name(x.rule) << "] " << x.message << "\n";
  return !has_errors(v);
}

struct InvalidInstance {};

Instance load_valid(const std::string& path, double scale, std::ostream& err) {
  Instance inst = load(path, scale);
  if (!report_violations(inst, err)) throw InvalidInstance{};
  return inst;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void check_cover(const Instance& inst, const Cover& c, const PhiFunction& phi) {
  for (std::size_t r = 0; r < c.regions.size(); ++r) {
    for (int t : c.membership[r]) {
      if (!phi.contains(c.regions[r], phi.apply(inst.trees[static_cast<std::size_t>(t)].vertices))) {
        throw InvariantViolation("tree " + std::to_string(t) + " is not inside its region");
      }
    }
    for (std::size_t s = r + 1; s < c.regions.size(); ++s) {
      if (phi.intersect(c.regions[r], c.regions[s])) throw InvariantViolation("output regions intersect");
    }
  }
}

// --- subcommands ---------------------------------------------------------------

struct Common {
  std::string input;
  double scale = 1.0;
};

int cmd_validate(const Common& c, std::ostream& err) {
  const Instance inst = load(c.input, c.scale);
  if (!report_violations(inst, err)) return kInvalid;
  err << "valid: m=" << inst.m() << " n=" << inst.n() << "\n";
  return kOk;
}

struct CoverArgs {
  std::string phi = "hull", algo = "fast", output, stats, shooter = "grid";
  std::uint64_t seed = 0;
  bool trace = false, check = false;
};

int cmd_cover(const Common& c, const CoverArgs& a, std::ostream& err) {
  const Instance inst = load_valid(c.input, c.scale, err);
  const PhiFunction phi(parse_phi_kind(a.phi));
  if (phi.kind() == PhiKind::mincircle) throw UsageError("cover supports --phi hull or box");
  Cover cover;
  std::string stats;
  std::vector<ShotRecord> rays;
  if (a.algo == "naive") {
    NaiveResult r = naive_phi_cover(inst, phi, MergePolicy::random(a.seed));
    cover = std::move(r.cover);
    stats = nlohmann::json{{"merges", r.merges.size()}, {"intersection_tests", r.intersection_tests}}.dump() + "\n";
  } else if (phi.kind() == PhiKind::hull) {
    HullCoverOptions opt;
    opt.shooter = a.shooter == "scan" ? ShooterKind::scan : ShooterKind::grid;
    opt.check_invariants = a.check;
    opt.record_trace = a.trace;
    HullCoverResult r = hull_cover_fast(inst, opt);
    cover = std::move(r.cover);
    stats = serialize_stats(r.stats);
    rays = std::move(r.trace);
  } else {
    BoxCoverResult r = box_cover_fast(inst, a.shooter == "scan" ? IndexKind::scan : IndexKind::grid);
    cover = std::move(r.cover);
    stats = serialize_stats(r.stats);
  }
  if (a.check) check_cover(inst, cover, phi);
  write_file(a.output, serialize_cover(canonical(std::move(cover)), phi.name(), rays));
  if (!a.stats.empty()) write_file(a.stats, stats);
  return kOk;
}

struct OracleArgs {
  std::string phi = "hull", output, forest, policy = "first-found";
  std::uint64_t seed = 0;
};

int cmd_oracle(const Common& c, const OracleArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_valid(c.input, c.scale, err);
  const PhiFunction phi(parse_phi_kind(a.phi));
  const MergePolicy policy = a.policy == "random" ? MergePolicy::random(a.seed) : MergePolicy::first_found();
  const NaiveResult r = naive_phi_cover(inst, phi, policy);
  const std::string cover = serialize_cover(canonical(r.cover), phi.name());
  if (a.output.empty()) {
    out << cover;
  } else {
    write_file(a.output, cover);
  }
  if (!a.forest.empty()) write_file(a.forest, serialize_forest(r.forest, phi));
  return kOk;
}

struct WellDefinedArgs {
  std::string phi = "hull";
  int trials = 20;
  bool exhaustive = false;
  std::uint64_t seed = 0;
};

int cmd_check(const Common& c, const WellDefinedArgs& a, std::ostream& out, std::ostream& err) {
  const Instance inst = load_valid(c.input, c.scale, err);
  const PhiFunction phi(parse_phi_kind(a.phi));
  if (a.exhaustive && inst.m() > static_cast<std::size_t>(kMaxExhaustiveTrees)) {
    throw UsageError("--exhaustive needs at most " + std::to_string(kMaxExhaustiveTrees) + " trees, input has " +
                     std::to_string(inst.m()));
  }
  const WellDefinedVerdict v = check_well_defined(inst, phi, a.trials, a.seed, a.exhaustive);
  if (v.well_defined) {
    out << "WELL-DEFINED over " << v.runs << (a.exhaustive ? " merge orders" : " trials") << "\n";
    return kOk;
  }
  const WellDefinedWitness& w = *v.witness;
  out << "WITNESS\n";
  out << "policy1: " << w.policy1.describe() << "\n";
  out << "cover1: " << serialize_cover(w.cover1, phi.name());
  out << "policy2: " << w.policy2.describe() << "\n";
  out << "cover2: " << serialize_cover(w.cover2, phi.name());
  return kWitness;
}

struct GenArgs {
  std::string kind, output;
  int trees = 3, size = 4;
  std::int64_t range = 0;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
  GenParams p;
  p.trees = a.trees;
  p.vertices_per_tree = a.size;
  p.range = a.range;
  write_file(a.output, serialize_instance(generate(parse_gen_kind(a.kind), p, a.seed)));
  return kOk;
}

struct BenchArgs {
  std::string phi = "hull", kinds = "combs", sizes = "100,200,400", algos = "fast,naive", output;
  int per_tree = 8;
  std::uint64_t seed = 0;
};

struct Measured {
  double wall_ms;
  std::uint64_t ops, merges;
};

Measured measure(const Instance& inst, const PhiFunction& phi, const std::string& algo) {
  Measured m{};
  auto once = [&] {
    if (algo == "naive") {
      const NaiveResult r = naive_phi_cover(inst, phi, MergePolicy::first_found());
      m.ops = r.intersection_tests;
      m.merges = r.merges.size();
    } else if (phi.kind() == PhiKind::hull) {
      const HullCoverResult r = hull_cover_fast(inst);
      m.ops = r.stats.rays_shot;
      m.merges = r.stats.merges;
    } else {
      const BoxCoverResult r = box_cover_fast(inst);
      m.ops = r.stats.queries;
      m.merges = r.stats.merges;
    }
  };
  once();  // warmup
  std::vector<double> times;
  for (int i = 0; i < 3; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    once();
    times.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(times.begin(), times.end());
  m.wall_ms = times[1];
  return m;
}

int cmd_bench(const BenchArgs& a, std::ostream& err) {
  const PhiFunction phi(parse_phi_kind(a.phi));
  if (phi.kind() == PhiKind::mincircle) throw UsageError("bench supports --phi hull or box");
  std::ostringstream csv;
  csv << "kind,n,algo,wall_ms,ops,merges\n";
  for (const std::string& kind : split(a.kinds)) {
    const GenKind k = parse_gen_kind(kind);
    for (const std::string& size : split(a.sizes)) {
      const long n = std::stol(size);
      GenParams p;
      p.vertices_per_tree = a.per_tree;
      p.trees = static_cast<int>(std::max<long>(1, n / a.per_tree));
      const Instance inst = generate(k, p, a.seed);
      for (const std::string& algo : split(a.algos)) {
        if (algo != "fast" && algo != "naive") throw UsageError("unknown algo " + algo);
        const Measured m = measure(inst, phi, algo);
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", m.wall_ms);
        csv << kind << "," << inst.n() << "," << algo << "," << ms << "," << m.ops << "," << m.merges << "\n";
        err << kind << " n=" << inst.n() << " " << algo << ": " << ms << " ms\n";
      }
    }
  }
  write_file(a.output, csv.str());
  return kOk;
}

struct RenderArgs {
  std::string cover, output;
};

int cmd_render(const Common& c, const RenderArgs& a) {
  const Instance inst = load(c.input, c.scale);
  std::optional<CoverDocument> doc;
  if (!a.cover.empty()) doc = parse_cover(read_file(a.cover));
  write_file(a.output, render_svg(inst, doc ? &*doc : nullptr));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hull and box covers of non-crossing geometric forests", "phicov"};
  app.require_subcommand(1);
  Common common;
  auto add_input = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--input", common.input, "instance JSON");
    if (required) o->required();
    sub->add_option("--scale", common.scale, "multiply coordinates by this before the integer check");
  };

  auto* validate = app.add_subcommand("validate", "check the forest invariants");
  add_input(validate);

  CoverArgs cover_args;
  auto* cover = app.add_subcommand("cover", "compute a hull or box cover");
  add_input(cover);
  cover->add_option("--phi", cover_args.phi)->check(CLI::IsMember({"hull", "box"}));
  cover->add_option("--algo", cover_args.algo)->check(CLI::IsMember({"fast", "naive"}));
  cover->add_option("--output", cover_args.output)->required();
  cover->add_option("--stats", cover_args.stats);
  cover->add_option("--seed", cover_args.seed);
  cover->add_option("--shooter", cover_args.shooter, "grid or scan (fast engines)")->check(CLI::IsMember({"grid", "scan"}));
  cover->add_flag("--trace", cover_args.trace, "attach the shot rays (fast hull)");
  cover->add_flag("--check-invariants", cover_args.check, "run the engine's brute-force self checks");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "naive merge-fixpoint cover");
  add_input(oracle);
  oracle->add_option("--phi", oracle_args.phi)->check(CLI::IsMember({"hull", "box", "mincircle"}));
  oracle->add_option("--output", oracle_args.output);
  oracle->add_option("--emit-forest", oracle_args.forest);
  oracle->add_option("--policy", oracle_args.policy)->check(CLI::IsMember({"first-found", "random"}));
  oracle->add_option("--seed", oracle_args.seed);

  WellDefinedArgs wd_args;
  auto* check = app.add_subcommand("check-well-defined", "compare covers over merge orders");
  add_input(check);
  check->add_option("--phi", wd_args.phi)->check(CLI::IsMember({"hull", "box", "mincircle"}));
  check->add_option("--trials", wd_args.trials)->check(CLI::Range(2, 1000000));
  check->add_flag("--exhaustive", wd_args.exhaustive);
  check->add_option("--seed", wd_args.seed);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", gen_args.kind)
      ->required()
      ->check(CLI::IsMember({"strips", "combs", "nested", "mincircle-gadget", "scatter"}));
  gen->add_option("--trees", gen_args.trees)->check(CLI::Range(1, 10000000));
  gen->add_option("--size", gen_args.size, "vertices per tree")->check(CLI::Range(1, 10000000));
  gen->add_option("--range", gen_args.range, "coordinate scale (0 = default)");
  gen->add_option("--seed", gen_args.seed);
  gen->add_option("--output", gen_args.output)->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "time fast and naive engines on generated instances");
  bench->add_option("--phi", bench_args.phi)->check(CLI::IsMember({"hull", "box"}));
  bench->add_option("--kinds", bench_args.kinds);
  bench->add_option("--sizes", bench_args.sizes, "total vertex counts");
  bench->add_option("--algos", bench_args.algos);
  bench->add_option("--per-tree", bench_args.per_tree)->check(CLI::Range(1, 1000000));
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--output", bench_args.output)->required();

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "draw an instance and optionally a cover as SVG");
  add_input(render);
  render->add_option("--cover", render_args.cover);
  render->add_option("--output", render_args.output)->required();

  std::vector<std::string> argv_store{"phicov"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(common, err);
    if (*cover) return cmd_cover(common, cover_args, err);
    if (*oracle) return cmd_oracle(common, oracle_args, out, err);
    if (*check) return cmd_check(common, wd_args, out, err);
    if (*gen) return cmd_gen(gen_args);
    if (*bench) return cmd_bench(bench_args, err);
    if (*render) return cmd_render(common, render_args);
  } catch (const InvalidInstance&) {
    return kInvalid;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InfeasibleParams& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}

}  // namespace phicov::cli
