#include "doctest.h"
#include "helpers.hpp"

using namespace mrp;

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(next_prime_above(10) == 11);
  CHECK(next_prime_above(11) == 13);
  CHECK(next_prime_above(1) == 2);
  CHECK_THROWS_AS(FieldTag::prime_field(100), ArithmeticError);
}

TEST_CASE("prime field arithmetic") {
  auto f = FieldTag::prime_field(7);
  auto a = Scalar::from_int(f, 3), b = Scalar::from_int(f, 5);
  CHECK((a + b).residue() == 1);
  CHECK((a - b).residue() == 5);
  CHECK((a * b).residue() == 1);
  CHECK((a / b).residue() == 2);
  CHECK((-a).residue() == 4);
  CHECK(Scalar::from_int(f, -1).residue() == 6);
  CHECK(inv_mod(3, 7) == 5);
  CHECK_THROWS_AS(a / Scalar::zero(f), ArithmeticError);
  CHECK(Scalar::parse(f, "12").str() == "5");
}

TEST_CASE("gf2 has char 2") {
  auto f = FieldTag::prime_field(2);
  auto one = Scalar::one(f);
  CHECK((one + one).is_zero());
  CHECK(-one == one);
}

TEST_CASE("rationals normalize") {
  auto f = FieldTag::rational_field();
  CHECK(Scalar::parse(f, "3/6").str() == "1/2");
  CHECK(Scalar::parse(f, "-4/2").str() == "-2");
  CHECK(Scalar::parse(f, "0").is_zero());
  CHECK((Scalar::parse(f, "1/3") + Scalar::parse(f, "1/6")).str() == "1/2");
  CHECK_THROWS_AS(Scalar::parse(f, "1/0"), ArithmeticError);
  CHECK_THROWS_AS(Scalar::parse(f, "x"), ArithmeticError);
}

TEST_CASE("mixing fields is an error") {
  CHECK_THROWS_AS(Scalar::one(FieldTag::prime_field(5)) + Scalar::one(FieldTag::prime_field(7)), ArithmeticError);
}

TEST_CASE("polynomials over gf(p)") {
  const std::uint32_t p = 5;
  Poly a{1, 1};  // 1 + x
  Poly b{4, 1};  // -1 + x
  auto prod = poly::mul(a, b, p);
  CHECK(prod == Poly{4, 0, 1});
  CHECK(poly::exact_div(prod, a, p) == b);
  CHECK(poly::sub(a, a, p).empty());
  CHECK(poly::add(a, b, p) == Poly{0, 2});
  CHECK_THROWS_AS(poly::exact_div(Poly{1, 0, 1}, a, p), ArithmeticError);
  CHECK(poly::monomial(3) == Poly{0, 0, 0, 1});
}

TEST_CASE("small known ranks") {
  auto f = FieldTag::prime_field(2);
  ExactMatrix a(2, 3, f);
  a.set(0, 0, Scalar::one(f));
  a.set(1, 1, Scalar::one(f));
  a.set(0, 2, Scalar::one(f));
  a.set(1, 2, Scalar::one(f));
  CHECK(mat_rank(a) == 2);
  // columns 0,1,2 dependent over gf2 (c0 + c1 = c2)
  CHECK(determinant(a.select_rows(std::vector<int>{0, 1}).select_columns(std::vector<int>{0, 2})).residue() == 1);
  CHECK(mat_basis_columns(a) == std::vector<int>{0, 1});
  ExactMatrix z(3, 3, FieldTag::rational_field());
  CHECK(mat_rank(z) == 0);
  CHECK(row_basis(z).rows() == 0);
}

TEST_CASE("property: elimination orders agree with minors") {
  std::mt19937_64 rng(11);
  std::vector<FieldTag> fields{FieldTag::prime_field(2), FieldTag::prime_field(3), FieldTag::prime_field(101),
                               FieldTag::rational_field()};
  for (int trial = 0; trial < 120; ++trial) {
    auto f = fields[trial % fields.size()];
    int rows = testkit::rand_int(rng, 1, 4), cols = testkit::rand_int(rng, 1, 5);
    auto a = testkit::random_matrix(rows, cols, f, rng, 0.4);
    std::vector<int> all(cols);
    std::iota(all.begin(), all.end(), 0);
    int want = testkit::minor_rank(a, all);
    CHECK(mat_rank(a) == want);
    CHECK(mat_rank_rowwise(a, all) == want);
    CHECK(mat_rank_fraction_free(a, all) == want);
    CHECK(mat_rank(a.transpose()) == want);
    CHECK(row_basis(a).rows() == want);
    CHECK(static_cast<int>(mat_basis_columns(a).size()) == want);
  }
}

TEST_CASE("property: determinant matches expansion") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = trial % 2 ? FieldTag::prime_field(7) : FieldTag::rational_field();
    int n = testkit::rand_int(rng, 1, 4);
    auto a = testkit::random_matrix(n, n, f, rng, 0.3);
    CHECK(determinant(a) == testkit::leibniz_det(a));
  }
}

TEST_CASE("property: multiply is associative and transposes") {
  std::mt19937_64 rng(13);
  auto f = FieldTag::prime_field(101);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = testkit::random_matrix(2, 3, f, rng), b = testkit::random_matrix(3, 4, f, rng),
         c = testkit::random_matrix(4, 2, f, rng);
    CHECK(a.multiply(b).multiply(c) == a.multiply(b.multiply(c)));
    CHECK(a.multiply(b).transpose() == b.transpose().multiply(a.transpose()));
  }
}

TEST_CASE("poly field ranks") {
  auto f = FieldTag::poly_ring(7);
  ExactMatrix a(2, 2, f);
  a.set(0, 0, Scalar::from_poly(f, {0, 1}));
  a.set(0, 1, Scalar::from_poly(f, {0, 0, 1}));
  a.set(1, 0, Scalar::one(f));
  a.set(1, 1, Scalar::from_poly(f, {0, 1}));
  // det = x*x - x^2 = 0
  CHECK(mat_rank(a) == 1);
  a.set(1, 1, Scalar::from_poly(f, {1, 1}));
  CHECK(mat_rank(a) == 2);
}
