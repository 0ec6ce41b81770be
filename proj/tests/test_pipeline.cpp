#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/generators.hpp"
#include "mrpath/io.hpp"
#include "mrpath/oracle.hpp"
#include "mrpath/pipeline.hpp"

using namespace mrp;

namespace {

InstanceBundle bundle_of(const Framework& f) {
  InstanceBundle b;
  b.framework = f;
  return b;
}

}  // namespace

TEST_CASE("property: full solve matches enumeration on small planar graphs") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testkit::rand_int(rng, 2, 10);
    auto f = testkit::random_framework(n, 0.7, testkit::rand_int(rng, 1, 4),
                                       trial % 2 ? FieldTag::prime_field(101) : FieldTag::prime_field(2),
                                       testkit::rand_int(rng, 0, 4), rng);
    bool want = testkit::naive_decision(f);
    auto r = solve_full(bundle_of(f), SolveOptions{});
    REQUIRE(r.verdict != SolveResult::Verdict::incomplete);
    CHECK((r.verdict == SolveResult::Verdict::yes) == want);
    if (want) CHECK(verify_witness(f, r.path));
  }
}

TEST_CASE("rank one is exact") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = testkit::random_framework(testkit::rand_int(rng, 2, 12), 0.6, 1, FieldTag::prime_field(3), 1, rng);
    auto r = solve_rank_one(f);
    CHECK((r.verdict == SolveResult::Verdict::yes) == testkit::naive_decision(f));
    if (r.verdict == SolveResult::Verdict::yes) CHECK(verify_witness(f, r.path));
  }
}

TEST_CASE("k above the matroid rank is no") {
  std::mt19937_64 rng(103);
  auto f = testkit::random_framework(9, 0.9, 2, FieldTag::prime_field(101), 3, rng);
  auto r = solve_full(bundle_of(f), SolveOptions{});
  CHECK(r.verdict == SolveResult::Verdict::no);
}

TEST_CASE("wall instance solves with a verified witness") {
  auto b = gen_wall_instance(5, parse_matroid_spec("random:3"), 2, 1);
  auto r = solve_full(b, SolveOptions{});
  REQUIRE(r.verdict == SolveResult::Verdict::yes);
  CHECK(verify_witness(b.framework, r.path));
  CHECK(r.log.front().rfind("constants relaxed", 0) == 0);
}

TEST_CASE("solve is deterministic") {
  auto b = gen_random_planar(14, 0.7, parse_matroid_spec("random:3@rational"), 3, 5);
  auto a = solve_full(b, SolveOptions{});
  auto c = solve_full(b, SolveOptions{});
  CHECK(a.path == c.path);
  CHECK(a.log == c.log);
  CHECK(a.independent_set == c.independent_set);
}

TEST_CASE("verdict names") {
  CHECK(std::string(verdict_name(SolveResult::Verdict::yes)) == "YES");
  CHECK(std::string(verdict_name(SolveResult::Verdict::incomplete)) == "INCOMPLETE");
}
