#include "mrpath/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mrp {

LinearMatroid::LinearMatroid(std::vector<int> ground, ExactMatrix a) : ground_(std::move(ground)), a_(std::move(a)) {
  if (static_cast<int>(ground_.size()) != a_.cols())
    throw std::invalid_argument("ground set size differs from column count");
  for (std::size_t j = 0; j < ground_.size(); ++j)
    if (!col_.emplace(ground_[j], static_cast<int>(j)).second)
      throw std::invalid_argument("duplicate ground element " + std::to_string(ground_[j]));
  rank_ = mat_rank(a_);
}

int LinearMatroid::column_of(int v) const {
  auto it = col_.find(v);
  if (it == col_.end()) throw std::out_of_range("unknown vertex " + std::to_string(v));
  return it->second;
}

std::vector<int> LinearMatroid::columns_of(const GroundSubset& s) const {
  std::vector<int> c;
  c.reserve(s.size());
  for (int v : s) c.push_back(column_of(v));
  return c;
}

int rank(const LinearMatroid& m, const GroundSubset& s) {
  auto cols = m.columns_of(s);
  return mat_rank(m.matrix(), cols);
}

bool is_independent(const LinearMatroid& m, const GroundSubset& s) {
  if (static_cast<int>(s.size()) > m.rank()) {
    m.columns_of(s);
    return false;
  }
  return rank(m, s) == static_cast<int>(s.size());
}

LinearMatroid restrict_to(const LinearMatroid& m, const GroundSubset& keep) {
  std::vector<int> ground;
  std::vector<int> cols;
  for (std::size_t j = 0; j < m.ground().size(); ++j)
    if (std::binary_search(keep.begin(), keep.end(), m.ground()[j])) {
      ground.push_back(m.ground()[j]);
      cols.push_back(static_cast<int>(j));
    }
  return LinearMatroid(std::move(ground), m.matrix().select_columns(cols));
}

LinearMatroid delete_element(const LinearMatroid& m, int v) {
  m.column_of(v);
  std::vector<int> ground;
  std::vector<int> cols;
  for (std::size_t j = 0; j < m.ground().size(); ++j)
    if (m.ground()[j] != v) {
      ground.push_back(m.ground()[j]);
      cols.push_back(static_cast<int>(j));
    }
  return LinearMatroid(std::move(ground), m.matrix().select_columns(cols));
}

GroundSubset set_union(const GroundSubset& a, const GroundSubset& b) {
  GroundSubset u;
  u.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
  return u;
}

bool disjoint(const GroundSubset& a, const GroundSubset& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) ++i;
    else ++j;
  }
  return true;
}

namespace {

// Calls fn(subset) for every size-p subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(int n, int p, F&& fn) {
  std::vector<int> idx(p);
  for (int i = 0; i < p; ++i) idx[i] = i;
  if (p > n) return;
  while (true) {
    fn(idx);
    int i = p - 1;
    while (i >= 0 && idx[i] == n - p + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<GroundSubset> representative_family(const LinearMatroid& mt, std::vector<GroundSubset> family,
                                                int p, int q) {
  if (p < 0 || q < 0) throw RepFamilyError("negative p or q");
  if (family.empty()) return {};
  if (mt.rank() != p + q)
    throw RepFamilyError("matroid rank " + std::to_string(mt.rank()) + " differs from p+q = " +
                         std::to_string(p + q));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  for (const auto& s : family) {
    if (static_cast<int>(s.size()) != p) throw RepFamilyError("member of wrong size");
    if (!is_independent(mt, s)) throw RepFamilyError("member not independent");
  }
  if (p == 0) return {family.front()};

  const ExactMatrix& a = mt.matrix();
  ExactMatrix rows_basis = a.rows() == p + q ? a : row_basis(a);
  std::vector<std::vector<int>> row_subsets;
  for_each_subset(p + q, p, [&](const std::vector<int>& r) { row_subsets.push_back(r); });

  ExactMatrix wedge(static_cast<int>(row_subsets.size()), static_cast<int>(family.size()), a.field());
  for (std::size_t j = 0; j < family.size(); ++j) {
    ExactMatrix cols = rows_basis.select_columns(mt.columns_of(family[j]));
    for (std::size_t i = 0; i < row_subsets.size(); ++i)
      wedge.set(static_cast<int>(i), static_cast<int>(j), determinant(cols.select_rows(row_subsets[i])));
  }
  std::vector<GroundSubset> out;
  for (int j : mat_basis_columns(wedge)) out.push_back(family[j]);
  return out;
}

std::optional<int> extend_independent(const LinearMatroid& m, const GroundSubset& i, const GroundSubset& c) {
  if (!is_independent(m, i)) throw std::invalid_argument("extend_independent: I is not independent");
  for (int v : c) {
    if (std::binary_search(i.begin(), i.end(), v)) continue;
    GroundSubset t = i;
    t.insert(std::upper_bound(t.begin(), t.end(), v), v);
    if (is_independent(m, t)) return v;
  }
  return std::nullopt;
}

bool validate_axioms(int ground_size, const std::vector<std::uint32_t>& family) {
  if (ground_size < 0 || ground_size > 20) throw std::invalid_argument("ground set too large");
  std::set<std::uint32_t> fam(family.begin(), family.end());
  // (I1)
  if (!fam.count(0u)) return false;
  const std::uint32_t full = ground_size == 32 ? ~0u : ((1u << ground_size) - 1);
  for (auto x : fam)
    if (x & ~full) return false;
  // (I2)
  for (auto x : fam)
    for (int b = 0; b < ground_size; ++b)
      if ((x >> b) & 1u)
        if (!fam.count(x & ~(1u << b))) return false;
  // (I3)
  for (auto x : fam)
    for (auto y : fam) {
      if (__builtin_popcount(y) <= __builtin_popcount(x)) continue;
      bool ok = false;
      for (int b = 0; b < ground_size && !ok; ++b)
        if (((y >> b) & 1u) && !((x >> b) & 1u) && fam.count(x | (1u << b))) ok = true;
      if (!ok) return false;
    }
  return true;
}

}  // namespace mrp
