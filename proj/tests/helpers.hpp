#ifndef MRPATH_TEST_HELPERS_HPP
#define MRPATH_TEST_HELPERS_HPP

// Generators and brute-force references shared by the unit and acceptance tests.
// Everything here is deliberately naive and independent of the library algorithms.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mrpath/exactalg.hpp"
#include "mrpath/framework.hpp"
#include "mrpath/generators.hpp"
#include "mrpath/graph.hpp"
#include "mrpath/matroid.hpp"

namespace testkit {

using mrp::ExactMatrix;
using mrp::FieldTag;
using mrp::Framework;
using mrp::Graph;
using mrp::GroundSubset;
using mrp::LinearMatroid;
using mrp::Scalar;

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Leibniz expansion; only for tiny square matrices.
inline Scalar leibniz_det(const ExactMatrix& a) {
  const int n = a.rows();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = Scalar::zero(a.field());
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Scalar term = Scalar::one(a.field());
    for (int i = 0; i < n; ++i) term = term * a.at(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline void for_each_subset(int n, int size, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (static_cast<int>(cur.size()) == size) {
      fn(cur);
      return;
    }
    if (n - i < size - static_cast<int>(cur.size())) return;
    cur.push_back(i);
    rec(i + 1);
    cur.pop_back();
    rec(i + 1);
  };
  rec(0);
}

// Rank as the order of the largest nonzero minor.
inline int minor_rank(const ExactMatrix& a, const std::vector<int>& cols) {
  const int limit = std::min<int>(a.rows(), static_cast<int>(cols.size()));
  for (int r = limit; r > 0; --r) {
    bool found = false;
    for_each_subset(a.rows(), r, [&](const std::vector<int>& rows) {
      if (found) return;
      for_each_subset(static_cast<int>(cols.size()), r, [&](const std::vector<int>& ci) {
        if (found) return;
        std::vector<int> cs;
        for (int c : ci) cs.push_back(cols[c]);
        if (!leibniz_det(a.select_rows(rows).select_columns(cs)).is_zero()) found = true;
      });
    });
    if (found) return r;
  }
  return 0;
}

inline int minor_rank(const LinearMatroid& m, const GroundSubset& s) {
  return minor_rank(m.matrix(), m.columns_of(s));
}

inline ExactMatrix random_matrix(int rows, int cols, FieldTag f, std::mt19937_64& rng, double zero_prob = 0.2) {
  ExactMatrix a(rows, cols, f);
  std::bernoulli_distribution zero(zero_prob);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (!zero(rng)) a.set(r, c, mrp::random_scalar(f, rng));
  return a;
}

inline LinearMatroid random_linear_matroid(int n, int rows, FieldTag f, std::mt19937_64& rng, double zero_prob = 0.2) {
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 0);
  return LinearMatroid(ground, random_matrix(rows, n, f, rng, zero_prob));
}

// Spanning subgraph of a w-column triangulated grid; planar by construction.
inline Graph random_planar_graph(int n, double keep, std::mt19937_64& rng) {
  Graph g(n);
  int w = 1;
  while (w * w < n) ++w;
  std::bernoulli_distribution coin(keep);
  auto try_add = [&](int u, int v) {
    if (v < n && coin(rng)) g.add_edge(u, v);
  };
  for (int v = 0; v < n; ++v) {
    if ((v + 1) % w != 0) try_add(v, v + 1);
    try_add(v, v + w);
    if ((v + 1) % w != 0) try_add(v, v + w + 1);
  }
  return g;
}

// Reference decision: DFS over every simple (s,t)-path.
inline bool naive_decision(const Framework& f) {
  const Graph& g = f.graph;
  std::vector<int> path{f.s};
  std::vector<char> on(g.id_bound(), 0);
  on[f.s] = 1;
  bool yes = false;
  std::function<void(int)> dfs = [&](int v) {
    if (yes) return;
    if (v == f.t) {
      GroundSubset s = path;
      std::sort(s.begin(), s.end());
      if (mrp::rank(f.matroid, s) >= f.k) yes = true;
      return;
    }
    for (int u : g.neighbors(v)) {
      if (on[u]) continue;
      on[u] = 1;
      path.push_back(u);
      dfs(u);
      path.pop_back();
      on[u] = 0;
    }
  };
  if (g.has_vertex(f.s) && g.has_vertex(f.t)) dfs(f.s);
  return yes;
}

inline Framework random_framework(int n, double keep, int rows, FieldTag field, int k, std::mt19937_64& rng) {
  Framework f;
  f.graph = random_planar_graph(n, keep, rng);
  f.matroid = random_linear_matroid(n, rows, field, rng, 0.3);
  f.s = rand_int(rng, 0, n - 1);
  do f.t = rand_int(rng, 0, n - 1);
  while (f.t == f.s);
  f.k = k;
  return f;
}

}  // namespace testkit

#endif
