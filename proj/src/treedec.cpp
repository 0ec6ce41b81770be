#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "mrpath/treedec.hpp"

namespace mrp {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

namespace {

bool in_bag(const std::vector<int>& bag, int v) { return std::binary_search(bag.begin(), bag.end(), v); }

}  // namespace

std::vector<std::string> validate_td(const Graph& g, const TreeDecomposition& td, int claimed_width) {
  std::vector<std::string> out;
  const int nn = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.parent.size()) != nn) {
    out.push_back("parent/bag size mismatch");
    return out;
  }
  if (nn == 0) {
    if (g.num_vertices() > 0) out.push_back("vertex uncovered");
    return out;
  }
  // Tree shape: exactly one root and no cycles in parent links.
  int roots = 0;
  for (int i = 0; i < nn; ++i) {
    if (td.parent[i] == -1) ++roots;
    else if (td.parent[i] < 0 || td.parent[i] >= nn) out.push_back("bad parent link");
  }
  if (roots != 1) out.push_back("not a tree");
  if (!out.empty()) return out;
  for (int i = 0; i < nn; ++i) {
    int x = i, steps = 0;
    while (x != -1 && steps <= nn) x = td.parent[x], ++steps;
    if (steps > nn) {
      out.push_back("not a tree");
      return out;
    }
  }
  for (const auto& b : td.bags)
    if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end()) {
      out.push_back("bag not a sorted set");
      return out;
    }

  std::vector<std::vector<int>> nbr(nn);
  for (int i = 0; i < nn; ++i)
    if (td.parent[i] >= 0) {
      nbr[i].push_back(td.parent[i]);
      nbr[td.parent[i]].push_back(i);
    }

  bool uncovered = false, disconnected = false;
  for (int v : g.vertices()) {
    std::vector<int> occ;
    for (int i = 0; i < nn; ++i)
      if (in_bag(td.bags[i], v)) occ.push_back(i);
    if (occ.empty()) {
      uncovered = true;
      continue;
    }
    std::vector<char> seen(nn, 0);
    std::deque<int> q{occ[0]};
    seen[occ[0]] = 1;
    int cnt = 0;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      ++cnt;
      for (int y : nbr[x])
        if (!seen[y] && in_bag(td.bags[y], v)) {
          seen[y] = 1;
          q.push_back(y);
        }
    }
    if (cnt != static_cast<int>(occ.size())) disconnected = true;
  }
  if (uncovered) out.push_back("vertex uncovered");
  for (auto [u, v] : g.edges()) {
    bool ok = false;
    for (const auto& b : td.bags)
      if (in_bag(b, u) && in_bag(b, v)) {
        ok = true;
        break;
      }
    if (!ok) {
      out.push_back("edge uncovered");
      break;
    }
  }
  if (disconnected) out.push_back("occupancy disconnected");
  for (const auto& b : td.bags)
    for (int v : b)
      if (!g.has_vertex(v)) {
        out.push_back("unknown vertex in bag");
        goto done;
      }
done:
  if (claimed_width >= 0 && td.width() > claimed_width) out.push_back("width exceeds claim");
  return out;
}

TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& order) {
  TreeDecomposition td;
  const int n = static_cast<int>(order.size());
  std::vector<int> pos(g.id_bound(), -1);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<int>> adj(g.id_bound());
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  td.bags.resize(n);
  td.parent.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    for (int u : adj[v])
      if (pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
    std::vector<int> bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = bag;
    int best = -1;
    for (int u : later)
      if (best < 0 || pos[u] < best) best = pos[u];
    td.parent[i] = best;
  }
  // Hook component roots together so the result is one tree.
  int last_root = -1;
  for (int i = n - 1; i >= 0; --i)
    if (td.parent[i] == -1) {
      if (last_root >= 0) td.parent[i] = last_root;
      else last_root = i;
    }
  return td;
}

}  // namespace mrp
