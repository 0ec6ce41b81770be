#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/oracle.hpp"

using namespace mrp;

TEST_CASE("property: oracles agree with enumeration") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 80; ++trial) {
    int n = testkit::rand_int(rng, 2, 10);
    auto f = testkit::random_framework(n, 0.75, testkit::rand_int(rng, 1, 5),
                                       trial % 2 ? FieldTag::prime_field(2) : FieldTag::rational_field(),
                                       testkit::rand_int(rng, 0, 5), rng);
    bool want = testkit::naive_decision(f);
    auto b = brute_force(f);
    CHECK(b.yes == want);
    if (b.yes) {
      CHECK(verify_witness(f, b.path));
      GroundSubset vs = b.path;
      std::sort(vs.begin(), vs.end());
      CHECK(rank(f.matroid, vs) == b.best_rank);
    }
    CHECK(brute_force_subset_form(f) == want);
    auto e = exact_search(f);
    CHECK(e.complete);
    CHECK(e.yes == want);
    if (e.yes) CHECK(verify_witness(f, e.path));
  }
}

TEST_CASE("oracle refuses large inputs") {
  std::mt19937_64 rng(72);
  auto f = testkit::random_framework(20, 0.7, 2, FieldTag::prime_field(101), 1, rng);
  CHECK_THROWS_AS(brute_force(f), OracleLimitError);
  CHECK_NOTHROW(brute_force(f, 20));
}

TEST_CASE("best rank is -1 without a path") {
  Framework f;
  f.graph = Graph(2);
  f.matroid = LinearMatroid({0, 1}, ExactMatrix(1, 2, FieldTag::prime_field(3)));
  f.k = 0;
  auto r = brute_force(f);
  CHECK_FALSE(r.yes);
  CHECK(r.best_rank == -1);
}

TEST_CASE("representation checker rejects a bad subfamily") {
  auto f = FieldTag::prime_field(5);
  ExactMatrix a(2, 3, f);
  a.set(0, 0, Scalar::one(f));
  a.set(1, 1, Scalar::one(f));
  a.set(1, 2, Scalar::one(f));
  LinearMatroid m({0, 1, 2}, a);  // 1 and 2 parallel
  std::vector<GroundSubset> fam{{0}, {1}, {2}};
  // Y = {0}: only {1} or {2} extend it, so keeping just {0} fails
  CHECK_FALSE(check_representative(m, fam, {{0}}, 1));
  CHECK(check_representative(m, fam, {{0}, {1}}, 1));
  CHECK(check_representative(m, fam, {{0}}, 0));
}

TEST_CASE("truncation checker rejects the identity when rank exceeds k") {
  auto f = FieldTag::prime_field(7);
  ExactMatrix a(2, 2, f);
  a.set(0, 0, Scalar::one(f));
  a.set(1, 1, Scalar::one(f));
  LinearMatroid m({0, 1}, a);
  CHECK_FALSE(check_truncation(m, m, 1));
  CHECK(check_truncation(m, truncate(m, 1), 1));
}
