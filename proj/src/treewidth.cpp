#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_set>

#include "mrpath/treedec.hpp"

namespace mrp {

namespace {

using Adj = std::vector<std::set<int>>;

Adj adjacency(const Graph& g) {
  Adj adj(g.id_bound());
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  return adj;
}

int fill_in(const Adj& adj, int v) {
  int fill = 0;
  for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
    for (auto b = std::next(a); b != adj[v].end(); ++b)
      if (!adj[*a].count(*b)) ++fill;
  return fill;
}

void eliminate(Adj& adj, int v) {
  std::vector<int> nb(adj[v].begin(), adj[v].end());
  for (std::size_t a = 0; a < nb.size(); ++a) {
    adj[nb[a]].erase(v);
    for (std::size_t b = a + 1; b < nb.size(); ++b) {
      adj[nb[a]].insert(nb[b]);
      adj[nb[b]].insert(nb[a]);
    }
  }
  adj[v].clear();
}

// Decision search over elimination sets; bit i stands for verts[i].
class ExactSearch {
 public:
  ExactSearch(const Graph& g, int w) : w_(w) {
    verts_ = g.vertices();
    n_ = static_cast<int>(verts_.size());
    std::vector<int> idx(g.id_bound(), -1);
    for (int i = 0; i < n_; ++i) idx[verts_[i]] = i;
    nb_.assign(n_, 0);
    for (auto [u, v] : g.edges()) {
      nb_[idx[u]] |= 1u << idx[v];
      nb_[idx[v]] |= 1u << idx[u];
    }
    full_ = n_ == 32 ? ~0u : (1u << n_) - 1;
  }

  // Returns false if the state budget ran out.
  bool run(bool& found) {
    found = dfs(0);
    return !out_of_budget_;
  }

  std::vector<int> ordering() const {
    std::vector<int> out;
    std::uint32_t used = 0;
    for (int i : order_) {
      out.push_back(verts_[i]);
      used |= 1u << i;
    }
    for (int i = 0; i < n_; ++i)
      if (!(used >> i & 1u)) out.push_back(verts_[i]);
    return out;
  }

 private:
  std::uint32_t q_set(std::uint32_t s, int v) const {
    std::uint32_t comp = 1u << v, frontier = comp;
    while (frontier) {
      std::uint32_t nxt = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) nxt |= nb_[std::countr_zero(f)];
      nxt &= s & ~comp;
      comp |= nxt;
      frontier = nxt;
    }
    std::uint32_t q = 0;
    for (std::uint32_t c = comp; c; c &= c - 1) q |= nb_[std::countr_zero(c)];
    return q & ~s & ~(1u << v);
  }

  bool dfs(std::uint32_t s) {
    std::uint32_t rest = full_ & ~s;
    if (std::popcount(rest) <= w_ + 1) return true;
    if (failed_.count(s)) return false;
    if (++states_ > kBudget) {
      out_of_budget_ = true;
      return false;
    }
    std::vector<std::uint32_t> q(n_, 0);
    for (std::uint32_t r = rest; r; r &= r - 1) q[std::countr_zero(r)] = q_set(s, std::countr_zero(r));
    // A simplicial vertex of small degree can always go first.
    for (std::uint32_t r = rest; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (std::popcount(q[v]) > w_) continue;
      bool simplicial = true;
      for (std::uint32_t a = q[v]; a && simplicial; a &= a - 1) {
        int u = std::countr_zero(a);
        if ((q[v] & ~(1u << u) & ~q[u]) != 0) simplicial = false;
      }
      if (simplicial) {
        order_.push_back(v);
        if (dfs(s | 1u << v)) return true;
        order_.pop_back();
        failed_.insert(s);
        return false;
      }
    }
    for (std::uint32_t r = rest; r; r &= r - 1) {
      int v = std::countr_zero(r);
      if (std::popcount(q[v]) > w_) continue;
      order_.push_back(v);
      if (dfs(s | 1u << v)) return true;
      order_.pop_back();
      if (out_of_budget_) return false;
    }
    failed_.insert(s);
    return false;
  }

  static constexpr long kBudget = 4000000;
  int w_;
  int n_ = 0;
  std::vector<int> verts_;
  std::vector<std::uint32_t> nb_;
  std::uint32_t full_ = 0;
  std::unordered_set<std::uint32_t> failed_;
  std::vector<int> order_;
  long states_ = 0;
  bool out_of_budget_ = false;
};

}  // namespace

std::vector<int> greedy_ordering(const Graph& g) {
  Adj adj = adjacency(g);
  auto rest = g.vertices();
  const bool min_fill = rest.size() <= 300;
  std::vector<int> order;
  while (!rest.empty()) {
    int best = -1;
    long best_score = 0;
    for (int v : rest) {
      long score = min_fill ? fill_in(adj, v) : static_cast<long>(adj[v].size());
      if (best < 0 || score < best_score) {
        best = v;
        best_score = score;
      }
    }
    order.push_back(best);
    eliminate(adj, best);
    rest.erase(std::find(rest.begin(), rest.end(), best));
  }
  return order;
}

int treewidth_lower_bound(const Graph& g) {
  Adj adj = adjacency(g);
  std::set<int> rest;
  for (int v : g.vertices()) rest.insert(v);
  int lb = rest.empty() ? -1 : 0;
  while (rest.size() > 1) {
    int v = -1;
    for (int u : rest)
      if (v < 0 || adj[u].size() < adj[v].size()) v = u;
    lb = std::max(lb, static_cast<int>(adj[v].size()));
    if (adj[v].empty()) {
      rest.erase(v);
      continue;
    }
    int w = -1;
    for (int u : adj[v])
      if (w < 0 || adj[u].size() < adj[w].size()) w = u;
    // Contract v into w.
    for (int u : adj[v]) {
      adj[u].erase(v);
      if (u != w) {
        adj[u].insert(w);
        adj[w].insert(u);
      }
    }
    adj[v].clear();
    rest.erase(v);
  }
  return lb;
}

TreewidthResult treewidth_decompose(const Graph& g, int w) {
  TreewidthResult res;
  auto greedy = td_from_ordering(g, greedy_ordering(g));
  if (greedy.width() <= w) {
    res.kind = TreewidthResult::Kind::decomposition;
    res.td = std::move(greedy);
    return res;
  }
  if (g.num_vertices() <= kExactTreewidthLimit) {
    ExactSearch ex(g, w);
    bool found = false;
    if (ex.run(found)) {
      if (found) {
        res.kind = TreewidthResult::Kind::decomposition;
        res.td = td_from_ordering(g, ex.ordering());
      } else {
        res.kind = TreewidthResult::Kind::exceeds;
        res.reason = "exact search: treewidth > " + std::to_string(w);
      }
      return res;
    }
  }
  if (treewidth_lower_bound(g) > w) {
    res.kind = TreewidthResult::Kind::exceeds;
    res.reason = "contraction degeneracy > " + std::to_string(w);
    return res;
  }
  if (greedy.width() <= 2 * w + 1) {
    res.kind = TreewidthResult::Kind::decomposition;
    res.td = std::move(greedy);
    return res;
  }
  res.reason = "greedy width " + std::to_string(greedy.width()) + " above " + std::to_string(2 * w + 1) +
               " and graph too large for exact search";
  return res;
}

int exact_treewidth(const Graph& g) {
  if (g.num_vertices() > kExactTreewidthLimit) throw std::invalid_argument("graph too large for exact treewidth");
  int ub = td_from_ordering(g, greedy_ordering(g)).width();
  for (int w = std::max(0, treewidth_lower_bound(g)); w < ub; ++w) {
    ExactSearch ex(g, w);
    bool found = false;
    if (!ex.run(found)) throw std::runtime_error("exact treewidth budget exhausted");
    if (found) return w;
  }
  return ub;
}

}  // namespace mrp
