#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/dp.hpp"
#include "mrpath/treedec.hpp"

using namespace mrp;

namespace {

DPResult run(const Framework& f, const DPOptions& opt = {}) {
  auto ntd = make_nice(td_from_ordering(f.graph, greedy_ordering(f.graph)), f.graph, f.s, f.t);
  return solve_dp(f, ntd, opt);
}

Framework single_edge_pair() {
  // s - t, both independent, k = 2
  Framework f;
  f.graph = Graph(2);
  f.graph.add_edge(0, 1);
  auto fld = FieldTag::prime_field(101);
  ExactMatrix a(2, 2, fld);
  a.set(0, 0, Scalar::one(fld));
  a.set(1, 1, Scalar::one(fld));
  f.matroid = LinearMatroid({0, 1}, a);
  f.s = 0;
  f.t = 1;
  f.k = 2;
  return f;
}

}  // namespace

TEST_CASE("terminals count towards the rank") {
  auto f = single_edge_pair();
  auto r = run(f);
  CHECK(r.yes);
  CHECK(r.path == std::vector<int>{0, 1});
  DPOptions literal;
  literal.paper_literal_root = true;
  CHECK_FALSE(run(f, literal).yes);
}

TEST_CASE("a path that must take the long way") {
  // s=0, t=3; short route 0-1-3, long route 0-2-4-3; only 2 and 4 carry rank
  Framework f;
  f.graph = Graph(5);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 3}, {0, 2}, {2, 4}, {4, 3}}) f.graph.add_edge(u, v);
  auto fld = FieldTag::rational_field();
  ExactMatrix a(2, 5, fld);
  a.set(0, 2, Scalar::one(fld));
  a.set(1, 4, Scalar::one(fld));
  f.matroid = LinearMatroid({0, 1, 2, 3, 4}, a);
  f.s = 0;
  f.t = 3;
  f.k = 2;
  auto r = run(f);
  CHECK(r.yes);
  CHECK(r.path == std::vector<int>{0, 2, 4, 3});
  CHECK(r.independent_set == GroundSubset{2, 4});
  f.k = 3;
  CHECK_FALSE(run(f).yes);
}

TEST_CASE("no path means no") {
  Framework f = single_edge_pair();
  f.graph.remove_edge(0, 1);
  f.k = 0;
  CHECK_FALSE(run(f).yes);
}

TEST_CASE("property: dp decision matches path enumeration") {
  std::mt19937_64 rng(61);
  std::vector<FieldTag> fields{FieldTag::prime_field(2), FieldTag::prime_field(101), FieldTag::rational_field()};
  for (int trial = 0; trial < 80; ++trial) {
    int n = testkit::rand_int(rng, 2, 9);
    auto f = testkit::random_framework(n, 0.7, testkit::rand_int(rng, 1, 4), fields[trial % 3],
                                       testkit::rand_int(rng, 0, 4), rng);
    bool want = testkit::naive_decision(f);
    auto r = run(f);
    CHECK(r.yes == want);
    if (r.yes) {
      CHECK(verify_witness(f, r.path));
      CHECK(static_cast<int>(r.independent_set.size()) >= f.k);
      CHECK(is_independent(f.matroid, r.independent_set));
    }
    DPOptions uk;
    uk.uniform_k = true;
    CHECK(run(f, uk).yes == want);
    if (n <= 6) {
      DPOptions unpruned;
      unpruned.prune = false;
      CHECK(run(f, unpruned).yes == want);
    }
  }
}

TEST_CASE("stats cover every node") {
  std::mt19937_64 rng(62);
  auto f = testkit::random_framework(8, 0.8, 3, FieldTag::prime_field(101), 2, rng);
  auto ntd = make_nice(td_from_ordering(f.graph, greedy_ordering(f.graph)), f.graph, f.s, f.t);
  auto r = solve_dp(f, ntd);
  CHECK(r.stats.cells_per_node.size() == ntd.nodes.size());
  CHECK(r.stats.entries_per_node.size() == ntd.nodes.size());
  auto tables = compute_tables(f, ntd);
  CHECK(tables.size() == ntd.nodes.size());
  long mx = 0;
  for (const auto& t : tables) mx = std::max(mx, t.entry_count());
  CHECK(mx == r.stats.max_entries);
}

TEST_CASE("leaf tables hold the empty partial solutions") {
  auto f = single_edge_pair();
  auto ntd = make_nice(td_from_ordering(f.graph, greedy_ordering(f.graph)), f.graph, f.s, f.t);
  auto tables = compute_tables(f, ntd);
  for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
    if (ntd.nodes[i].kind != NiceKind::leaf) continue;
    const DPCell* apart = tables[i].find(DPKey{{0, 1}, sm_make({{0, 0}, {1, 1}}), 0});
    REQUIRE(apart != nullptr);
    CHECK(apart->entries.size() == 1);
    CHECK(apart->entries[0].s.empty());
    // the st edge is usable from the start
    const DPCell* joined = tables[i].find(DPKey{{0, 1}, sm_make({{0, 1}}), 0});
    REQUIRE(joined != nullptr);
    CHECK(joined->entries[0].s.empty());
  }
}

TEST_CASE("property: randomized truncation never invents a yes") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = testkit::random_framework(testkit::rand_int(rng, 3, 9), 0.8, testkit::rand_int(rng, 2, 4),
                                       FieldTag::prime_field(trial % 2 ? 2 : 3), testkit::rand_int(rng, 1, 4), rng);
    DPOptions opt;
    opt.truncation.mode = TruncateOptions::Mode::randomized;
    opt.truncation.seed = static_cast<std::uint64_t>(trial);
    DPResult r;
    CHECK_NOTHROW(r = run(f, opt));
    if (r.yes) CHECK(testkit::naive_decision(f));
  }
}
