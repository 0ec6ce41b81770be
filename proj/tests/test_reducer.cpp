#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/generators.hpp"
#include "mrpath/io.hpp"
#include "mrpath/oracle.hpp"
#include "mrpath/reducer.hpp"

using namespace mrp;

TEST_CASE("rerouting height") {
  CHECK(rerouting_height(1) == 9);
  CHECK(rerouting_height(2) == 21);
  CHECK(rerouting_height(3) == 37);
}

TEST_CASE("constant chain for k = 2") {
  auto c = constants_for(2);
  CHECK(c.paper);
  CHECK(c.b == 21);
  CHECK(c.x == 3);
  CHECK(c.z == 63);
  CHECK(c.q == 71);
  CHECK(c.r == 145);
  CHECK(c.g == 5256);
}

TEST_CASE("constant chain for k = 3") {
  auto c = constants_for(3);
  CHECK(c.b == 37);
  CHECK(c.x == 4);
  CHECK(c.z == 148);
  CHECK(c.q == 462);
  CHECK(c.r == 927);
  CHECK(c.g == 33408);
}

TEST_CASE("constants saturate") {
  auto c = constants_for(12);
  CHECK(c.g <= kConstantSaturation);
  CHECK(c.r > 0);
}

TEST_CASE("relaxed constants") {
  auto d = default_relaxed(2);
  CHECK_FALSE(d.paper);
  CHECK(d.q == 5);
  CHECK(d.r == 13);
  CHECK(default_relaxed(1).r == 7);
  auto p = parse_constants("relaxed:1,1,1,3,5", 2);
  CHECK(p.q == 3);
  CHECK(p.r == 5);
  CHECK(parse_constants("paper", 2).g == 5256);
  CHECK(parse_constants("relaxed", 2).r == 13);
  CHECK_THROWS_AS(parse_constants("relaxed:1,1,2,3,5", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_constants("relaxed:1,1,1,2,5", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_constants("fast", 2), std::invalid_argument);
}

TEST_CASE("narrow graphs fall below the threshold") {
  std::mt19937_64 rng(91);
  auto f = testkit::random_framework(12, 0.8, 3, FieldTag::prime_field(101), 2, rng);
  auto r = reduce_once(f, default_relaxed(2));
  CHECK((r.kind == ReduceOutcome::Kind::below_threshold || r.kind == ReduceOutcome::Kind::irrelevant));
  if (r.kind == ReduceOutcome::Kind::below_threshold) CHECK(validate_td(f.graph, r.td).empty());
}

TEST_CASE("vertices off every s-t block are irrelevant") {
  // path 0-1-2 plus pendant 3 on 1
  Framework f;
  f.graph = Graph(4);
  f.graph.add_edge(0, 1);
  f.graph.add_edge(1, 2);
  f.graph.add_edge(1, 3);
  auto fld = FieldTag::prime_field(5);
  f.matroid = LinearMatroid({0, 1, 2, 3}, ExactMatrix(1, 4, fld));
  f.s = 0;
  f.t = 2;
  f.k = 1;
  auto r = reduce_once(f, default_relaxed(1));
  REQUIRE(r.kind == ReduceOutcome::Kind::irrelevant);
  CHECK(r.vertex == 3);
}

TEST_CASE("property: deletions on wall instances keep the answer") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    auto spec = parse_matroid_spec(seed % 2 ? "sparse:2:3" : "partition:2");
    auto b = gen_wall_instance(13, spec, 2, seed);
    auto before = exact_search(b.framework);
    REQUIRE(before.complete);
    auto r = reduce_once(b.framework, default_relaxed(2), b.wall);
    if (r.kind == ReduceOutcome::Kind::path_found) {
      CHECK(verify_witness(b.framework, r.path));
      CHECK(before.yes);
    } else if (r.kind == ReduceOutcome::Kind::irrelevant) {
      auto g = b.framework;
      delete_vertex(g, r.vertex);
      auto after = exact_search(g);
      REQUIRE(after.complete);
      CHECK(after.yes == before.yes);
    }
  }
}

TEST_CASE("reduce loop replays deletions") {
  auto b = gen_wall_instance(5, parse_matroid_spec("sparse:2:2"), 2, 4);
  ReduceLoopOptions opt;
  opt.verify_deletions = true;
  auto r = reduce_loop(b.framework, default_relaxed(2), b.wall, opt);
  CHECK(r.replay_mismatches == 0);
  CHECK(r.reduced.graph.num_vertices() + static_cast<int>(r.deletions.size()) == b.framework.graph.num_vertices());
  CHECK(std::string(outcome_name(r.last.kind)).size() > 0);
}
