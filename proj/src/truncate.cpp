#include <random>

#include "mrpath/matroid.hpp"

namespace mrp {

namespace {

constexpr double kMaxSymbolicDegree = 4096;

std::vector<std::vector<int>> independent_k_subsets(const ExactMatrix& b, int k) {
  std::vector<std::vector<int>> out;
  const int n = b.cols();
  std::vector<int> nonloop;
  for (int c = 0; c < n; ++c) {
    int one[1] = {c};
    if (mat_rank(b, one) == 1) nonloop.push_back(c);
  }
  const int m = static_cast<int>(nonloop.size());
  if (k > m) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<int> cols(k);
  while (true) {
    for (int i = 0; i < k; ++i) cols[i] = nonloop[idx[i]];
    if (mat_rank(b, cols) == k) out.push_back(cols);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

bool certify(const ExactMatrix& image, const std::vector<std::vector<int>>& indep, int k) {
  for (const auto& s : indep)
    if (mat_rank(image, s) != k) return false;
  return true;
}

Scalar power(Scalar base, std::uint64_t e) {
  Scalar out = Scalar::one(base.field());
  for (; e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    if (e > 1) base = base * base;
  }
  return out;
}

// k x rows(b) matrix with entry (i, j) = x^((i + 1) * w[j]).
ExactMatrix evaluated_image(const ExactMatrix& b, int k, const std::vector<std::uint64_t>& w, const Scalar& x) {
  ExactMatrix t(k, b.rows(), b.field());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < b.rows(); ++j) t.set(i, j, power(x, static_cast<std::uint64_t>(i + 1) * w[j]));
  return t;
}

ExactMatrix to_poly(const ExactMatrix& b) {
  FieldTag f = FieldTag::poly_ring(b.field().p);
  ExactMatrix out(b.rows(), b.cols(), f);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.set(r, c, Scalar::from_int(f, static_cast<long long>(b.at(r, c).residue())));
  return out;
}

// Row i, column j gets x^((i + off) * w[j]).
ExactMatrix symbolic_image(const ExactMatrix& bp, int k, const std::vector<std::uint64_t>& w, int off) {
  const int r = bp.rows();
  FieldTag f = bp.field();
  ExactMatrix t(k, r, f);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < r; ++j) t.set(i, j, Scalar::from_poly(f, poly::monomial(static_cast<std::uint64_t>(i + off) * w[j])));
  return t.multiply(bp);
}

}  // namespace

LinearMatroid truncate(const LinearMatroid& m, int k, const TruncateOptions& opt) {
  if (k < 0) throw TruncationError("negative truncation rank");
  ExactMatrix b = row_basis(m.matrix());
  const int r = b.rows();
  if (k >= r) return LinearMatroid(m.ground(), b);
  const FieldTag f = b.field();

  if (opt.mode == TruncateOptions::Mode::randomized) {
    std::mt19937_64 rng(opt.seed);
    ExactMatrix t(k, r, f);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < r; ++j) {
        long long v = f.kind == FieldTag::Kind::rational ? static_cast<long long>(rng() % 2001) - 1000
                                                         : static_cast<long long>(rng() % f.p);
        t.set(i, j, Scalar::from_int(f, v));
      }
    return LinearMatroid(m.ground(), t.multiply(b));
  }

  auto indep = independent_k_subsets(b, k);

  if (opt.mode == TruncateOptions::Mode::certified) {
    // Entry (i, j) is x^((i+1) * w_j). Plain weights w_j = j first; if some minor vanishes
    // identically, weights (k+1)^j give every minor a unique leading monomial.
    std::vector<std::uint64_t> plain(r), spread(r);
    double plain_deg = 0, spread_deg = 0;
    for (int j = 0; j < r; ++j) {
      plain[j] = static_cast<std::uint64_t>(j);
      spread[j] = j == 0 ? 1 : spread[j - 1] * static_cast<std::uint64_t>(k + 1);
      plain_deg += static_cast<double>(k) * j;
      spread_deg += static_cast<double>(k) * static_cast<double>(spread[j]);
    }
    for (const auto& [w, deg] : {std::pair{plain, plain_deg}, std::pair{spread, spread_deg}}) {
      // a nonzero polynomial of degree d has at most d roots per certified set
      double bound = static_cast<double>(indep.size()) * deg + 1;
      if (f.kind == FieldTag::Kind::prime) bound = std::min(bound, static_cast<double>(f.p) - 1);
      bound = std::min(bound, 4096.0);
      for (long long x = 1; x <= static_cast<long long>(bound); ++x) {
        ExactMatrix img = evaluated_image(b, k, w, Scalar::from_int(f, x)).multiply(b);
        if (certify(img, indep, k)) return LinearMatroid(m.ground(), img);
      }
    }
    if (!opt.symbolic_fallback || f.kind != FieldTag::Kind::prime)
      throw TruncationError("no evaluation point in " + f.str() + " preserves independence");
  }

  if (f.kind != FieldTag::Kind::prime) throw TruncationError("symbolic truncation needs a prime field");
  ExactMatrix bp = to_poly(b);
  // Cheap weight schemes first; certification decides.
  std::vector<std::vector<std::uint64_t>> schemes(3, std::vector<std::uint64_t>(r));
  for (int j = 0; j < r; ++j) {
    schemes[0][j] = j;
    schemes[1][j] = static_cast<std::uint64_t>(j) * j;
    schemes[2][j] = (std::uint64_t{1} << std::min(j, 30)) - 1;
  }
  for (const auto& w : schemes) {
    if (static_cast<double>(k - 1) * static_cast<double>(w.back()) > kMaxSymbolicDegree) break;
    ExactMatrix img = symbolic_image(bp, k, w, 0);
    if (certify(img, indep, k)) return LinearMatroid(m.ground(), img);
  }
  // Weights (k+1)^j with exponents (i+1)w_j: the leading monomial of every k x k minor of T is
  // x^(sum (b+1)(k+1)^(j_b)), distinct per row set, so no independent set can cancel.
  std::vector<std::uint64_t> w(r);
  double degree = k;
  for (int j = 0; j < r; ++j) {
    w[j] = j == 0 ? 1 : w[j - 1] * static_cast<std::uint64_t>(k + 1);
    if (j > 0) degree *= (k + 1);
  }
  if (degree > kMaxSymbolicDegree) throw TruncationError("symbolic truncation degree too large");
  ExactMatrix img = symbolic_image(bp, k, w, 1);
  if (certify(img, indep, k)) return LinearMatroid(m.ground(), img);
  throw TruncationError("symbolic truncation failed certification");
}

}  // namespace mrp
