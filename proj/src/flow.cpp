#include <algorithm>
#include <deque>

#include "mrpath/graph.hpp"

namespace mrp {

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
    int rev;
    int orig;
  };
  std::vector<std::vector<Arc>> adj;
  explicit FlowNet(int n) : adj(n) {}
  void add(int u, int v, int cap) {
    adj[u].push_back({v, cap, static_cast<int>(adj[v].size()), cap});
    adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1, 0});
  }
  bool augment(int s, int t) {
    std::vector<std::pair<int, int>> prev(adj.size(), {-1, -1});
    std::deque<int> q{s};
    prev[s] = {s, -1};
    while (!q.empty() && prev[t].first < 0) {
      int u = q.front();
      q.pop_front();
      for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
        const Arc& a = adj[u][i];
        if (a.cap > 0 && prev[a.to].first < 0) {
          prev[a.to] = {u, i};
          q.push_back(a.to);
        }
      }
    }
    if (prev[t].first < 0) return false;
    for (int v = t; v != s;) {
      auto [u, i] = prev[v];
      Arc& a = adj[u][i];
      a.cap -= 1;
      adj[v][a.rev].cap += 1;
      v = u;
    }
    return true;
  }
  std::vector<char> residual_reach(int s) const {
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (const Arc& a : adj[u])
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          q.push_back(a.to);
        }
    }
    return seen;
  }
};

}  // namespace

DisjointPathsResult vertex_disjoint_paths(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, int c,
                                          const std::vector<char>* blocked) {
  DisjointPathsResult res;
  auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  std::vector<int> dense(g.id_bound(), -1);
  for (int i = 0; i < n; ++i) dense[verts[i]] = i;
  std::vector<char> in_a(g.id_bound(), 0), in_b(g.id_bound(), 0);
  for (int v : a)
    if (g.has_vertex(v)) in_a[v] = 1;
  for (int v : b)
    if (g.has_vertex(v)) in_b[v] = 1;
  auto cap_of = [&](int v) {
    if (a.size() == 1 && v == a[0]) return c;
    if (b.size() == 1 && v == b[0]) return c;
    return 1;
  };
  const int src = 2 * n, snk = 2 * n + 1;
  FlowNet net(2 * n + 2);
  for (int i = 0; i < n; ++i) {
    int v = verts[i];
    if (blocked && (*blocked)[v] && !in_a[v] && !in_b[v]) continue;
    if (in_a[v]) net.add(src, 2 * i, cap_of(v));
    net.add(2 * i, 2 * i + 1, cap_of(v));
    if (in_b[v]) net.add(2 * i + 1, snk, cap_of(v));
    for (int w : g.neighbors(v)) {
      if (blocked && (*blocked)[w] && !in_a[w] && !in_b[w]) continue;
      // Edges never bind, so a failed run leaves a vertex cut; two shared ends still get one edge.
      net.add(2 * i + 1, 2 * dense[w], cap_of(v) > 1 && cap_of(w) > 1 ? 1 : c);
    }
  }
  int flow = 0;
  while (flow < c && net.augment(src, snk)) ++flow;

  if (flow >= c) {
    res.found = true;
    // Decompose: each unit of flow leaves the source once.
    for (int k = 0; k < c; ++k) {
      std::vector<int> path;
      int u = src;
      while (u != snk) {
        int next = -1;
        for (auto& arc : net.adj[u]) {
          if (arc.orig == 0 || arc.orig - arc.cap <= 0) continue;
          arc.cap += 1;
          next = arc.to;
          break;
        }
        if (next < 0) break;
        if (next < 2 * n && next % 2 == 0) {
          int v = verts[next / 2];
          auto it = std::find(path.begin(), path.end(), v);
          if (it != path.end()) path.erase(it + 1, path.end());
          else path.push_back(v);
        }
        u = next;
      }
      res.paths.push_back(std::move(path));
    }
    std::sort(res.paths.begin(), res.paths.end());
    return res;
  }

  auto reach = net.residual_reach(src);
  for (int i = 0; i < n; ++i) {
    int v = verts[i];
    bool cut = (reach[2 * i] && !reach[2 * i + 1]);
    if (in_a[v] && !reach[2 * i] && cap_of(v) == 1) cut = true;
    if (in_b[v] && reach[2 * i + 1] && cap_of(v) == 1) cut = true;
    if (cut) res.separator.push_back(v);
  }
  return res;
}

}  // namespace mrp
