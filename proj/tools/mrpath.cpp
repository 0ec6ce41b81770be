#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mrpath/generators.hpp"
#include "mrpath/io.hpp"
#include "mrpath/oracle.hpp"
#include "mrpath/pipeline.hpp"
#include "mrpath/reducer.hpp"

using namespace mrp;

namespace {

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kIncomplete = 3, kVerifyFailed = 4 };

struct Globals {
  std::string constants = "relaxed";
  std::uint64_t seed = 0;
  bool verify = false;
  bool uniform_k = false;
  bool literal_forget = false;
  bool literal_root = false;
  bool randomized = false;
  int width_limit = 6;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DPOptions dp_options(const Globals& g) {
  DPOptions o;
  o.uniform_k = g.uniform_k;
  o.paper_literal_forget = g.literal_forget;
  o.paper_literal_root = g.literal_root;
  if (g.randomized) {
    o.truncation.mode = TruncateOptions::Mode::randomized;
    o.truncation.seed = g.seed;
  }
  return o;
}

int emit(ResultRecord rec, const char* answer_override = nullptr) {
  if (answer_override) rec.answer = answer_override;
  std::cout << format_result(rec);
  if (rec.answer == "YES") return kYes;
  if (rec.answer == "NO") return kNo;
  return kIncomplete;
}

// Compares a decision with brute force when the instance is small enough; returns false on disagreement.
bool cross_check(const Framework& f, bool yes, std::vector<std::string>& log) {
  if (f.graph.num_vertices() > kOracleLimit) {
    log.push_back("verify: skipped, instance above the oracle limit");
    return true;
  }
  bool want = brute_force(f).yes;
  log.push_back(std::string("verify: oracle says ") + (want ? "YES" : "NO") + (want == yes ? ", agrees" : ", DISAGREES"));
  return want == yes;
}

int run_solve(const Globals& g, const std::string& file) {
  auto b = read_instance_file(file);
  SolveOptions opt;
  opt.constants = parse_constants(g.constants, b.framework.k);
  opt.dp = dp_options(g);
  opt.dp_width_limit = g.width_limit;
  auto r = solve_full(b, opt);
  ResultRecord rec{verdict_name(r.verdict), r.path, r.independent_set, r.deletions, r.log};
  if (g.verify && r.verdict != SolveResult::Verdict::incomplete &&
      !cross_check(b.framework, r.verdict == SolveResult::Verdict::yes, rec.log)) {
    emit(rec);
    return kVerifyFailed;
  }
  return emit(rec);
}

int run_dp(const Globals& g, const std::string& file, const std::string& td_file, bool stats) {
  auto b = read_instance_file(file);
  const Framework& f = b.framework;
  TreeDecomposition td;
  ResultRecord rec;
  if (!td_file.empty()) {
    td = parse_td(slurp(td_file));
    auto errs = validate_td(f.graph, td);
    if (!errs.empty()) throw std::invalid_argument("decomposition invalid: " + errs[0]);
  } else {
    td = td_from_ordering(f.graph, greedy_ordering(f.graph));
  }
  auto ntd = make_nice(td, f.graph, f.s, f.t);
  auto d = solve_dp(f, ntd, dp_options(g));
  rec.answer = d.yes ? "YES" : "NO";
  rec.path = d.path;
  rec.independent_set = d.independent_set;
  rec.log.push_back("decomposition width " + std::to_string(td.width()) + ", nice nodes " + std::to_string(ntd.nodes.size()));
  rec.log.push_back("largest table " + std::to_string(d.stats.max_entries) + " entries");
  if (stats)
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
      rec.log.push_back("node " + std::to_string(i) + " " + kind_name(ntd.nodes[i].kind) + " cells " +
                        std::to_string(d.stats.cells_per_node[i]) + " entries " +
                        std::to_string(d.stats.entries_per_node[i]));
  if (g.verify && !cross_check(f, d.yes, rec.log)) {
    emit(rec);
    return kVerifyFailed;
  }
  return emit(rec);
}

int run_oracle(const std::string& file, int limit) {
  auto b = read_instance_file(file);
  auto r = brute_force(b.framework, limit);
  ResultRecord rec;
  rec.answer = r.yes ? "YES" : "NO";
  if (r.yes) {
    rec.path = r.path;
    GroundSubset on(r.path.begin(), r.path.end());
    std::sort(on.begin(), on.end());
    GroundSubset basis;
    while (auto v = extend_independent(b.framework.matroid, basis, on))
      basis.insert(std::upper_bound(basis.begin(), basis.end(), *v), *v);
    rec.independent_set = basis;
  }
  rec.log.push_back("best rank " + std::to_string(r.best_rank) + ", " + std::to_string(r.nodes) + " paths examined");
  return emit(rec);
}

int run_reduce(const Globals& g, const std::string& file, bool verify_deletions, const std::string& out) {
  auto b = read_instance_file(file);
  auto c = parse_constants(g.constants, b.framework.k);
  ReduceLoopOptions opt;
  opt.verify_deletions = verify_deletions;
  auto r = reduce_loop(b.framework, c, b.wall, opt);
  ResultRecord rec;
  rec.deletions = r.deletions;
  rec.log.push_back(std::string("last outcome ") + outcome_name(r.last.kind) + (r.last.reason.empty() ? "" : ": " + r.last.reason));
  if (verify_deletions)
    rec.log.push_back("replayed " + std::to_string(r.replay_checks) + " deletions, " +
                      std::to_string(r.replay_mismatches) + " changed the answer");
  if (!out.empty()) {
    InstanceBundle reduced = b;
    reduced.framework = r.reduced;
    reduced.embedding.reset();
    reduced.wall.reset();
    reduced.meta["reduced_from"] = file;
    std::ofstream(out) << write_instance(reduced);
  }
  int code = kIncomplete;
  if (r.last.kind == ReduceOutcome::Kind::path_found) {
    rec.answer = "YES";
    rec.path = r.last.path;
    rec.independent_set = r.last.independent_set;
    code = kYes;
  } else if (r.last.kind == ReduceOutcome::Kind::below_threshold) {
    rec.answer = "REDUCED";
    rec.log.push_back("decomposition of width " + std::to_string(r.last.td.width()) + " left for the dp");
    code = kYes;
  } else {
    rec.answer = "INCOMPLETE";
  }
  emit(rec);
  if (verify_deletions && r.replay_mismatches > 0) return kVerifyFailed;
  return code;
}

int run_gen(const Globals& g, const std::string& kind, int n, double density, int h, int subdivide,
            const std::string& matroid, int k, const std::string& out) {
  auto spec = parse_matroid_spec(matroid);
  InstanceBundle b;
  if (kind == "planar") b = gen_random_planar(n, density, spec, k, g.seed);
  else if (kind == "wall") b = gen_wall_instance(h, spec, k, g.seed, subdivide);
  else throw std::invalid_argument("gen kind must be planar or wall");
  auto text = write_instance(b);
  if (out.empty()) std::cout << text;
  else std::ofstream(out) << text;
  return 0;
}

int run_check(const std::string& what, const std::string& file, const std::string& td_file, int p, int q) {
  auto b = read_instance_file(file);
  const Framework& f = b.framework;
  std::vector<std::string> errs;
  std::string summary;
  if (what == "td") {
    if (td_file.empty()) throw std::invalid_argument("check td needs --td");
    auto td = parse_td(slurp(td_file));
    errs = validate_td(f.graph, td);
    summary = "width " + std::to_string(td.width());
  } else if (what == "wall") {
    if (!b.wall) throw std::invalid_argument("instance has no WALL block");
    errs = validate_wall(f.graph, *b.wall);
    summary = "height " + std::to_string(b.wall->height) + ", " + std::to_string(layer_count(b.wall->height)) + " layers";
  } else if (what == "matroid") {
    errs = validate_framework(f);
    const int n = static_cast<int>(f.matroid.ground().size());
    if (n <= 16) {
      std::vector<std::uint32_t> fam;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        GroundSubset s;
        for (int j = 0; j < n; ++j)
          if (mask >> j & 1) s.push_back(f.matroid.ground()[j]);
        if (is_independent(f.matroid, s)) fam.push_back(mask);
      }
      if (!validate_axioms(n, fam)) errs.push_back("independence axioms fail");
      summary = std::to_string(fam.size()) + " independent sets, rank " + std::to_string(f.matroid.rank());
    } else {
      summary = "axioms skipped above 16 elements, rank " + std::to_string(f.matroid.rank());
    }
  } else if (what == "rep") {
    if (p < 0 || q < 0 || p + q > f.matroid.rank()) throw std::invalid_argument("need 0 <= p, q and p + q <= rank");
    const auto& ground = f.matroid.ground();
    if (ground.size() > static_cast<std::size_t>(kCheckerLimit)) throw std::invalid_argument("ground set too large");
    std::vector<GroundSubset> family;
    for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
      if (std::popcount(mask) != p) continue;
      GroundSubset s;
      for (std::size_t j = 0; j < ground.size(); ++j)
        if (mask >> j & 1) s.push_back(ground[j]);
      if (is_independent(f.matroid, s)) family.push_back(s);
    }
    auto sub = representative_family(truncate(f.matroid, p + q), family, p, q);
    if (!check_representative(f.matroid, family, sub, q)) errs.push_back("subfamily is not representative");
    summary = "family " + std::to_string(family.size()) + ", kept " + std::to_string(sub.size());
  } else {
    throw std::invalid_argument("check target must be td, wall, matroid or rep");
  }
  std::cout << (errs.empty() ? "ok" : "invalid") << "\n";
  for (const auto& e : errs) std::cout << "violation: " << e << "\n";
  std::cout << "# " << summary << "\n";
  return errs.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum rank (s,t)-path solver for planar frameworks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--constants", g.constants, "paper, relaxed, or relaxed:b,x,z,q,r");
  app.add_option("--seed", g.seed, "seed for generators and randomized truncation");
  app.add_flag("--verify", g.verify, "cross-check the answer with brute force when small");
  app.add_flag("--uniform-k-rep", g.uniform_k, "prune with the uniform k instead of k - i");
  app.add_flag("--paper-literal-forget", g.literal_forget, "rem-based forget transition");
  app.add_flag("--paper-literal-root", g.literal_root, "accept only at the plain root check");
  app.add_flag("--randomized", g.randomized, "randomized truncation");
  app.add_option("--dp-width-limit", g.width_limit, "widest decomposition given to the dp");

  std::string file, td_file, out, kind, matroid = "random:3@gfp101", check_what;
  bool stats = false, verify_deletions = false;
  int limit = kOracleLimit, n = 10, h = 7, subdivide = 0, k = 2, p = 1, q = 1;
  double density = 0.7;

  auto* solve = app.add_subcommand("solve", "full pipeline");
  solve->add_option("instance", file)->required()->check(CLI::ExistingFile);
  auto* dp = app.add_subcommand("dp", "tree decomposition dynamic program");
  dp->add_option("instance", file)->required()->check(CLI::ExistingFile);
  dp->add_option("--td", td_file, "precomputed decomposition");
  dp->add_flag("--stats", stats, "per-node table sizes");
  auto* red = app.add_subcommand("reduce", "irrelevant-vertex loop");
  red->add_option("instance", file)->required()->check(CLI::ExistingFile);
  red->add_flag("--verify-deletions", verify_deletions, "brute-force replay of every deletion while small");
  red->add_option("--out", out, "write the reduced instance here");
  auto* orc = app.add_subcommand("oracle", "brute force");
  orc->add_option("instance", file)->required()->check(CLI::ExistingFile);
  orc->add_option("--limit", limit, "largest vertex count accepted");
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("kind", kind, "planar or wall")->required();
  gen->add_option("--n", n);
  gen->add_option("--density", density);
  gen->add_option("--height", h);
  gen->add_option("--subdivide", subdivide, "extra vertices per wall edge, at most");
  gen->add_option("--matroid", matroid, "kind[:a[:b]][@field]");
  gen->add_option("--k", k);
  gen->add_option("--out", out);
  auto* chk = app.add_subcommand("check", "validators");
  chk->add_option("what", check_what, "td, wall, matroid or rep")->required();
  chk->add_option("instance", file)->required()->check(CLI::ExistingFile);
  chk->add_option("--td", td_file);
  chk->add_option("--p", p);
  chk->add_option("--q", q);
  for (auto* sub : {solve, dp, red, orc, gen, chk}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  try {
    if (*solve) return run_solve(g, file);
    if (*dp) return run_dp(g, file, td_file, stats);
    if (*red) return run_reduce(g, file, verify_deletions, out);
    if (*orc) return run_oracle(file, limit);
    if (*gen) return run_gen(g, kind, n, density, h, subdivide, matroid, k, out);
    if (*chk) return run_check(check_what, file, td_file, p, q);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIncomplete;
  }
  return kUsage;
}
