#include <algorithm>
#include <functional>
#include <string>

#include "mrpath/oracle.hpp"

namespace mrp {

namespace {

// Calls fn on every subset of ground of size <= max_size, in lexicographic order per size.
void for_each_subset(const std::vector<int>& ground, int max_size, const std::function<void(const GroundSubset&)>& fn) {
  const int n = static_cast<int>(ground.size());
  GroundSubset cur;
  std::function<void(int)> rec = [&](int from) {
    fn(cur);
    if (static_cast<int>(cur.size()) == max_size) return;
    for (int i = from; i < n; ++i) {
      cur.push_back(ground[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

GroundSubset sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void enumerate_paths(const Framework& f, int limit, const std::function<bool(const std::vector<int>&)>& on_path) {
  if (f.graph.num_vertices() > limit)
    throw OracleLimitError("instance has " + std::to_string(f.graph.num_vertices()) + " vertices, limit " +
                           std::to_string(limit));
  if (!f.graph.has_vertex(f.s) || !f.graph.has_vertex(f.t)) return;
  std::vector<char> on(f.graph.id_bound(), 0);
  std::vector<int> path{f.s};
  on[f.s] = 1;
  bool stop = false;
  std::function<void(int)> dfs = [&](int u) {
    if (u == f.t) {
      stop = on_path(path);
      return;
    }
    for (int w : f.graph.neighbors(u)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
      if (stop) return;
    }
  };
  dfs(f.s);
}

}  // namespace

OracleResult brute_force(const Framework& f, int limit) {
  OracleResult res;
  const int cap = f.matroid.rank();
  enumerate_paths(f, limit, [&](const std::vector<int>& p) {
    ++res.nodes;
    int r = rank(f.matroid, sorted_copy(p));
    if (r > res.best_rank) {
      res.best_rank = r;
      res.path = p;
    }
    return res.best_rank >= cap;  // nothing can beat the full rank
  });
  res.yes = res.best_rank >= f.k;
  return res;
}

bool brute_force_subset_form(const Framework& f, int limit) {
  bool yes = false;
  enumerate_paths(f, limit, [&](const std::vector<int>& p) {
    auto vs = sorted_copy(p);
    if (static_cast<int>(vs.size()) < f.k) return false;
    for_each_subset(vs, f.k, [&](const GroundSubset& x) {
      if (static_cast<int>(x.size()) == f.k && is_independent(f.matroid, x)) yes = true;
    });
    return yes;
  });
  return yes;
}

OracleResult exact_search(const Framework& f, long node_budget) {
  OracleResult res;
  const Graph& g = f.graph;
  if (!g.has_vertex(f.s) || !g.has_vertex(f.t)) return res;
  std::vector<char> on(g.id_bound(), 0);
  std::vector<int> path{f.s};
  on[f.s] = 1;
  bool done = false;
  std::function<void(int)> dfs = [&](int u) {
    if (done) return;
    if (++res.nodes > node_budget) {
      res.complete = false;
      done = true;
      return;
    }
    if (u == f.t) {
      int r = rank(f.matroid, sorted_copy(path));
      res.best_rank = std::max(res.best_rank, r);
      if (r >= f.k) {
        res.yes = true;
        res.path = path;
        done = true;
      }
      return;
    }
    // Everything the rest of the path could still visit.
    auto reach = reachable(g, u, &on);
    if (!std::binary_search(reach.begin(), reach.end(), f.t)) return;
    res.best_rank = std::max(res.best_rank, 0);
    auto bound = set_union(sorted_copy(path), reach);
    if (rank(f.matroid, bound) < f.k) return;
    for (int w : g.neighbors(u)) {
      if (on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      on[w] = 0;
      if (done) return;
    }
  };
  dfs(f.s);
  return res;
}

bool check_representative(const LinearMatroid& m, const std::vector<GroundSubset>& family,
                          const std::vector<GroundSubset>& sub, int q) {
  if (static_cast<int>(m.ground().size()) > kCheckerLimit) throw OracleLimitError("ground set too large");
  for (const auto& x : sub)
    if (std::find(family.begin(), family.end(), x) == family.end()) return false;
  bool ok = true;
  auto fits = [&](const GroundSubset& x, const GroundSubset& y) {
    return disjoint(x, y) && is_independent(m, set_union(x, y));
  };
  for_each_subset(m.ground(), q, [&](const GroundSubset& y) {
    if (!ok) return;
    bool want = std::any_of(family.begin(), family.end(), [&](const GroundSubset& x) { return fits(x, y); });
    if (want && std::none_of(sub.begin(), sub.end(), [&](const GroundSubset& x) { return fits(x, y); })) ok = false;
  });
  return ok;
}

bool check_truncation(const LinearMatroid& m, const LinearMatroid& mt, int k) {
  if (static_cast<int>(m.ground().size()) > kCheckerLimit) throw OracleLimitError("ground set too large");
  if (m.ground() != mt.ground()) return false;
  bool ok = true;
  for_each_subset(m.ground(), k + 1, [&](const GroundSubset& x) {
    if (!ok) return;
    bool want = static_cast<int>(x.size()) <= k && is_independent(m, x);
    if (is_independent(mt, x) != want) ok = false;
  });
  return ok;
}

}  // namespace mrp
