#include "mrpath/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace mrp {

Graph::Graph(int n) {
  for (int v = 0; v < n; ++v) add_vertex(v);
}

void Graph::add_vertex(int v) {
  if (v < 0) throw std::invalid_argument("negative vertex id");
  if (v >= id_bound()) {
    present_.resize(v + 1, 0);
    adj_.resize(v + 1);
  }
  if (present_[v]) return;
  present_[v] = 1;
  ++nv_;
}

bool Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
  if (!has_vertex(u) || !has_vertex(v))
    throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) + " uses unknown vertex");
  auto& a = adj_[u];
  auto it = std::lower_bound(a.begin(), a.end(), v);
  if (it != a.end() && *it == v) return false;
  a.insert(it, v);
  auto& b = adj_[v];
  b.insert(std::lower_bound(b.begin(), b.end(), u), u);
  ++ne_;
  return true;
}

void Graph::remove_edge(int u, int v) {
  if (!has_edge(u, v)) return;
  auto& a = adj_[u];
  a.erase(std::lower_bound(a.begin(), a.end(), v));
  auto& b = adj_[v];
  b.erase(std::lower_bound(b.begin(), b.end(), u));
  --ne_;
}

void Graph::remove_vertex(int v) {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
  auto nbrs = adj_[v];
  for (int u : nbrs) remove_edge(u, v);
  present_[v] = 0;
  --nv_;
}

bool Graph::has_edge(int u, int v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::vertices() const {
  std::vector<int> out;
  out.reserve(nv_);
  for (int v = 0; v < id_bound(); ++v)
    if (present_[v]) out.push_back(v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < id_bound(); ++u)
    if (present_[u])
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  Graph h;
  std::vector<char> in(id_bound(), 0);
  for (int v : keep)
    if (has_vertex(v)) {
      in[v] = 1;
      h.add_vertex(v);
    }
  for (int u : keep)
    if (has_vertex(u))
      for (int v : adj_[u])
        if (u < v && in[v]) h.add_edge(u, v);
  return h;
}

std::vector<int> reachable(const Graph& g, int from, const std::vector<char>* blocked) {
  std::vector<int> out;
  if (!g.has_vertex(from)) return out;
  std::vector<char> seen(g.id_bound(), 0);
  std::deque<int> q{from};
  seen[from] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    out.push_back(u);
    for (int v : g.neighbors(u)) {
      if (seen[v] || (blocked && (*blocked)[v])) continue;
      seen[v] = 1;
      q.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.id_bound(), 0);
  for (int v : g.vertices()) {
    if (seen[v]) continue;
    auto c = reachable(g, v);
    for (int u : c) seen[u] = 1;
    comps.push_back(std::move(c));
  }
  return comps;
}

std::optional<std::vector<int>> shortest_path(const Graph& g, int a, int b, const std::vector<char>* blocked) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) return std::nullopt;
  std::vector<int> parent(g.id_bound(), -2);
  std::deque<int> q{a};
  parent[a] = -1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == b) break;
    for (int v : g.neighbors(u)) {
      if (parent[v] != -2 || (blocked && (*blocked)[v] && v != b)) continue;
      parent[v] = u;
      q.push_back(v);
    }
  }
  if (parent[b] == -2) return std::nullopt;
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

bool is_simple_path(const Graph& g, const std::vector<int>& path) {
  if (path.empty()) return false;
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int v : path)
    if (!g.has_vertex(v)) return false;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) return false;
  return true;
}

}  // namespace mrp
