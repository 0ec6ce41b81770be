#ifndef MRPATH_EXACTALG_HPP
#define MRPATH_EXACTALG_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace mrp {

// Coefficients low to high, reduced mod p, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

struct FieldTag {
  // poly is GF(p)[x], used only for symbolic truncation; elimination over it is
  // fraction-free so it behaves as the field of rational functions.
  enum class Kind { prime, rational, poly };
  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldTag prime_field(std::uint32_t p);
  static FieldTag rational_field() { return {}; }
  static FieldTag poly_ring(std::uint32_t p);

  bool operator==(const FieldTag&) const = default;
  std::string str() const;
};

bool is_prime(std::uint64_t n);
std::uint32_t next_prime_above(std::uint64_t n);

struct ArithmeticError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  static Scalar zero(FieldTag f);
  static Scalar one(FieldTag f) { return from_int(f, 1); }
  static Scalar from_int(FieldTag f, long long n);
  static Scalar from_rational(const mpq_class& q);
  static Scalar from_poly(FieldTag f, Poly coeffs);
  // Decimal residue for prime fields, "a" or "a/b" for rationals.
  static Scalar parse(FieldTag f, std::string_view text);

  const FieldTag& field() const { return f_; }
  bool is_zero() const;
  std::string str() const;

  std::uint64_t residue() const { return std::get<std::uint64_t>(v_); }
  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  const Poly& poly() const { return std::get<Poly>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  // Exact division; over poly only divisions without remainder are allowed.
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const { return f_ == o.f_ && v_ == o.v_; }

 private:
  FieldTag f_;
  std::variant<std::uint64_t, mpq_class, Poly> v_;
};

namespace poly {
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
// Throws ArithmeticError if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b, std::uint32_t p);
Poly monomial(std::uint64_t degree);
std::string str(const Poly& a);
}  // namespace poly

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols, FieldTag f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldTag& field() const { return field_; }

  const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, Scalar s);

  ExactMatrix select_columns(std::span<const int> cols) const;
  ExactMatrix select_rows(std::span<const int> rows) const;
  ExactMatrix transpose() const;
  ExactMatrix multiply(const ExactMatrix& b) const;
  bool operator==(const ExactMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  FieldTag field_;
  std::vector<Scalar> e_;
};

// Ordinary elimination, pivot = first nonzero scanning rows top-down, columns in given order.
// Over poly the same pivot rule drives fraction-free elimination.
int mat_rank(const ExactMatrix& a, std::span<const int> cols);
int mat_rank(const ExactMatrix& a);
// Second elimination order: eliminate the transposed selection.
int mat_rank_rowwise(const ExactMatrix& a, std::span<const int> cols);
// Fraction-free (Bareiss) elimination with the same pivot rule.
int mat_rank_fraction_free(const ExactMatrix& a, std::span<const int> cols);
// Greedy left to right: keep a column iff it increases rank.
std::vector<int> mat_basis_columns(const ExactMatrix& a);
// Rows of an echelon basis of the row space; result has exactly rank rows.
ExactMatrix row_basis(const ExactMatrix& a);
Scalar determinant(const ExactMatrix& a);

}  // namespace mrp

#endif
