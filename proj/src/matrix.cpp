#include "mrpath/exactalg.hpp"

#include <numeric>

namespace mrp {

ExactMatrix::ExactMatrix(int rows, int cols, FieldTag f)
    : rows_(rows), cols_(cols), field_(f),
      e_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

void ExactMatrix::set(int r, int c, Scalar s) {
  if (!(s.field() == field_)) throw ArithmeticError("entry field differs from matrix field");
  e_[static_cast<std::size_t>(r) * cols_ + c] = std::move(s);
}

ExactMatrix ExactMatrix::select_columns(std::span<const int> cols) const {
  ExactMatrix m(rows_, static_cast<int>(cols.size()), field_);
  for (int r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m.set(r, static_cast<int>(j), at(r, cols[j]));
  return m;
}

ExactMatrix ExactMatrix::select_rows(std::span<const int> rows) const {
  ExactMatrix m(static_cast<int>(rows.size()), cols_, field_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int c = 0; c < cols_; ++c) m.set(static_cast<int>(i), c, at(rows[i], c));
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix m(cols_, rows_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.set(c, r, at(r, c));
  return m;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& b) const {
  if (cols_ != b.rows_) throw ArithmeticError("dimension mismatch in multiply");
  ExactMatrix m(rows_, b.cols_, field_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < b.cols_; ++c) {
      Scalar acc = Scalar::zero(field_);
      for (int j = 0; j < cols_; ++j) {
        const Scalar& x = at(r, j);
        if (x.is_zero()) continue;
        acc = acc + x * b.at(j, c);
      }
      m.set(r, c, std::move(acc));
    }
  return m;
}

namespace {

struct PrimeOps {
  using T = std::uint64_t;
  std::uint64_t p;
  T get(const Scalar& s) const { return s.residue(); }
  Scalar put(const FieldTag& f, T v) const { return Scalar::from_int(f, static_cast<long long>(v)); }
  bool zero(const T& a) const { return a == 0; }
  T one() const { return 1; }
  T mul(const T& a, const T& b) const { return a * b % p; }
  T sub(const T& a, const T& b) const { return (a + p - b) % p; }
  T neg(const T& a) const { return (p - a) % p; }
  T div(const T& a, const T& b) const { return a * inv_mod(b, p) % p; }
};

struct RatOps {
  using T = mpq_class;
  T get(const Scalar& s) const { return s.rational(); }
  Scalar put(const FieldTag&, const T& v) const { return Scalar::from_rational(v); }
  bool zero(const T& a) const { return sgn(a) == 0; }
  T one() const { return 1; }
  T mul(const T& a, const T& b) const { return a * b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T neg(const T& a) const { return -a; }
  T div(const T& a, const T& b) const { return a / b; }
};

struct PolyOps {
  using T = Poly;
  std::uint32_t p;
  T get(const Scalar& s) const { return s.poly(); }
  Scalar put(const FieldTag& f, const T& v) const { return Scalar::from_poly(f, v); }
  bool zero(const T& a) const { return a.empty(); }
  T one() const { return {1}; }
  T mul(const T& a, const T& b) const { return poly::mul(a, b, p); }
  T sub(const T& a, const T& b) const { return poly::sub(a, b, p); }
  T neg(const T& a) const { return poly::sub({}, a, p); }
  T div(const T& a, const T& b) const { return poly::exact_div(a, b, p); }
};

template <class Ops>
using Dense = std::vector<std::vector<typename Ops::T>>;

template <class Ops>
Dense<Ops> load(const Ops& ops, const ExactMatrix& a, std::span<const int> cols) {
  Dense<Ops> d(a.rows(), std::vector<typename Ops::T>(cols.size()));
  for (int r = 0; r < a.rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) d[r][j] = ops.get(a.at(r, cols[j]));
  return d;
}

// Returns the positions (into the column order) that received a pivot.
template <class Ops>
std::vector<int> eliminate(const Ops& ops, Dense<Ops>& d, std::size_t ncols, bool fraction_free,
                           std::vector<int>* pivot_rows = nullptr) {
  const std::size_t nrows = d.size();
  std::vector<char> used(nrows, 0);
  std::vector<int> pivots;
  typename Ops::T prev = ops.one();
  for (std::size_t j = 0; j < ncols && pivots.size() < nrows; ++j) {
    std::size_t pr = nrows;
    for (std::size_t r = 0; r < nrows; ++r)
      if (!used[r] && !ops.zero(d[r][j])) {
        pr = r;
        break;
      }
    if (pr == nrows) continue;
    used[pr] = 1;
    pivots.push_back(static_cast<int>(j));
    if (pivot_rows) pivot_rows->push_back(static_cast<int>(pr));
    const auto piv = d[pr][j];
    for (std::size_t r = 0; r < nrows; ++r) {
      if (used[r]) continue;
      if (fraction_free) {
        const auto f = d[r][j];
        for (std::size_t c = j + 1; c < ncols; ++c)
          d[r][c] = ops.div(ops.sub(ops.mul(piv, d[r][c]), ops.mul(f, d[pr][c])), prev);
        d[r][j] = typename Ops::T{};
      } else {
        if (ops.zero(d[r][j])) continue;
        const auto f = ops.div(d[r][j], piv);
        for (std::size_t c = j + 1; c < ncols; ++c)
          if (!ops.zero(d[pr][c])) d[r][c] = ops.sub(d[r][c], ops.mul(f, d[pr][c]));
        d[r][j] = typename Ops::T{};
      }
    }
    if (fraction_free) prev = piv;
  }
  return pivots;
}

template <class F>
auto dispatch(const FieldTag& f, F&& fn) {
  switch (f.kind) {
    case FieldTag::Kind::prime: return fn(PrimeOps{f.p});
    case FieldTag::Kind::rational: return fn(RatOps{});
    case FieldTag::Kind::poly: return fn(PolyOps{f.p});
  }
  throw ArithmeticError("unknown field");
}

void check_cols(const ExactMatrix& a, std::span<const int> cols) {
  for (int c : cols)
    if (c < 0 || c >= a.cols()) throw std::out_of_range("column index out of range");
}

bool must_be_fraction_free(const FieldTag& f) { return f.kind == FieldTag::Kind::poly; }

}  // namespace

int mat_rank(const ExactMatrix& a, std::span<const int> cols) {
  check_cols(a, cols);
  if (cols.empty() || a.rows() == 0) return 0;
  return dispatch(a.field(), [&](auto ops) {
    auto d = load(ops, a, cols);
    return static_cast<int>(eliminate(ops, d, cols.size(), must_be_fraction_free(a.field())).size());
  });
}

int mat_rank(const ExactMatrix& a) {
  std::vector<int> all(a.cols());
  std::iota(all.begin(), all.end(), 0);
  return mat_rank(a, all);
}

int mat_rank_rowwise(const ExactMatrix& a, std::span<const int> cols) {
  check_cols(a, cols);
  if (cols.empty() || a.rows() == 0) return 0;
  ExactMatrix t = a.select_columns(cols).transpose();
  std::vector<int> order(t.cols());
  std::iota(order.begin(), order.end(), 0);
  return dispatch(a.field(), [&](auto ops) {
    auto d = load(ops, t, order);
    return static_cast<int>(eliminate(ops, d, order.size(), must_be_fraction_free(a.field())).size());
  });
}

int mat_rank_fraction_free(const ExactMatrix& a, std::span<const int> cols) {
  check_cols(a, cols);
  if (cols.empty() || a.rows() == 0) return 0;
  return dispatch(a.field(), [&](auto ops) {
    auto d = load(ops, a, cols);
    return static_cast<int>(eliminate(ops, d, cols.size(), true).size());
  });
}

std::vector<int> mat_basis_columns(const ExactMatrix& a) {
  std::vector<int> all(a.cols());
  std::iota(all.begin(), all.end(), 0);
  if (a.rows() == 0 || a.cols() == 0) return {};
  return dispatch(a.field(), [&](auto ops) {
    auto d = load(ops, a, all);
    return eliminate(ops, d, all.size(), must_be_fraction_free(a.field()));
  });
}

ExactMatrix row_basis(const ExactMatrix& a) {
  std::vector<int> all(a.cols());
  std::iota(all.begin(), all.end(), 0);
  return dispatch(a.field(), [&](auto ops) {
    auto d = load(ops, a, all);
    std::vector<int> prow;
    eliminate(ops, d, all.size(), must_be_fraction_free(a.field()), &prow);
    ExactMatrix out(static_cast<int>(prow.size()), a.cols(), a.field());
    for (std::size_t i = 0; i < prow.size(); ++i)
      for (int c = 0; c < a.cols(); ++c) out.set(static_cast<int>(i), c, ops.put(a.field(), d[prow[i]][c]));
    return out;
  });
}

Scalar determinant(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw ArithmeticError("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return Scalar::one(a.field());
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  return dispatch(a.field(), [&](auto ops) {
    auto d = load(ops, a, all);
    bool negate = false;
    typename decltype(ops)::T prev = ops.one();
    for (int j = 0; j < n; ++j) {
      int pr = -1;
      for (int r = j; r < n; ++r)
        if (!ops.zero(d[r][j])) {
          pr = r;
          break;
        }
      if (pr < 0) return Scalar::zero(a.field());
      if (pr != j) {
        std::swap(d[pr], d[j]);
        negate = !negate;
      }
      for (int r = j + 1; r < n; ++r) {
        for (int c = j + 1; c < n; ++c)
          d[r][c] = ops.div(ops.sub(ops.mul(d[j][j], d[r][c]), ops.mul(d[r][j], d[j][c])), prev);
      }
      prev = d[j][j];
    }
    auto det = d[n - 1][n - 1];
    if (negate) det = ops.neg(det);
    return ops.put(a.field(), det);
  });
}

}  // namespace mrp
