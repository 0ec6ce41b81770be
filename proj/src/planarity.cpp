#include <algorithm>
#include <deque>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "mrpath/graph.hpp"

namespace mrp {

namespace {

std::vector<int> comp_of(const Graph& g) {
  std::vector<int> comp(g.id_bound(), -1);
  int c = 0;
  for (const auto& cc : connected_components(g)) {
    for (int v : cc) comp[v] = c;
    ++c;
  }
  return comp;
}

}  // namespace

int count_faces(const Graph& g, const RotationSystem& rot) {
  auto comp = comp_of(g);
  int ncomp = static_cast<int>(connected_components(g).size());
  std::vector<int> orbits(ncomp, 0);
  std::map<std::pair<int, int>, char> used;
  auto pos = [&](int v, int u) {
    const auto& r = rot.order.at(v);
    auto it = std::find(r.begin(), r.end(), u);
    if (it == r.end()) throw std::invalid_argument("rotation system misses an edge");
    return static_cast<int>(it - r.begin());
  };
  for (auto [a, b] : g.edges())
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      if (used.count({u, v})) continue;
      ++orbits[comp[u]];
      int x = u, y = v;
      while (!used.count({x, y})) {
        used[{x, y}] = 1;
        const auto& r = rot.order.at(y);
        int nx = r[(pos(y, x) + 1) % r.size()];
        x = y;
        y = nx;
      }
    }
  int faces = 0;
  for (int c = 0; c < ncomp; ++c) faces += std::max(1, orbits[c]);
  return faces - (ncomp - 1);
}

bool euler_check(const Graph& g, const RotationSystem& rot) {
  for (int v : g.vertices()) {
    auto it = rot.order.find(v);
    std::vector<int> r = it == rot.order.end() ? std::vector<int>{} : it->second;
    std::sort(r.begin(), r.end());
    if (r != g.neighbors(v)) return false;
  }
  int c = static_cast<int>(connected_components(g).size());
  return g.num_vertices() - g.num_edges() + count_faces(g, rot) == 1 + c;
}

std::optional<RotationSystem> planar_embed(const Graph& g) {
  using BG = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                   boost::property<boost::vertex_index_t, int>,
                                   boost::property<boost::edge_index_t, int>>;
  auto verts = g.vertices();
  std::vector<int> dense(g.id_bound(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) dense[verts[i]] = static_cast<int>(i);
  BG bg(verts.size());
  int ei = 0;
  for (auto [u, v] : g.edges()) {
    auto e = boost::add_edge(dense[u], dense[v], bg).first;
    boost::put(boost::edge_index, bg, e, ei++);
  }
  using Edge = boost::graph_traits<BG>::edge_descriptor;
  std::vector<std::vector<Edge>> emb(verts.size());
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = &emb[0]);
  if (!planar) return std::nullopt;
  RotationSystem rot;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    auto& r = rot.order[verts[i]];
    for (const Edge& e : emb[i]) {
      auto a = boost::source(e, bg), b = boost::target(e, bg);
      r.push_back(verts[static_cast<std::size_t>(a) == i ? b : a]);
    }
  }
  if (!euler_check(g, rot)) throw std::logic_error("planarity embedding failed the Euler check");
  return rot;
}

std::vector<std::vector<int>> biconnected_components(const Graph& g) {
  const int n = g.id_bound();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<int>> blocks;
  std::vector<std::pair<int, int>> estack;
  int timer = 0;
  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  for (int root : g.vertices()) {
    if (disc[root] >= 0) continue;
    std::vector<Frame> st{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        int w = nb[f.next++];
        if (disc[w] < 0) {
          estack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          st.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          estack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      int v = f.v, p = f.parent;
      st.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        std::vector<int> block;
        while (true) {
          auto e = estack.back();
          estack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e.first == p && e.second == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

BlockSplit biconnected_split(const Graph& g, int s, int t) {
  BlockSplit out;
  auto rs = reachable(g, s);
  if (s == t || !std::binary_search(rs.begin(), rs.end(), t)) {
    out.no_path = s != t;
    if (s == t) out.blocks.push_back({{s}, s, t});
    return out;
  }
  auto blocks = biconnected_components(g);
  const int nb = static_cast<int>(blocks.size());
  std::map<int, std::vector<int>> blocks_of;
  for (int b = 0; b < nb; ++b)
    for (int v : blocks[b]) blocks_of[v].push_back(b);
  // Nodes 0..nb-1 are blocks, nb+v is the cut vertex v.
  auto node_of = [&](int v) { return blocks_of[v].size() > 1 ? nb + v : blocks_of[v][0]; };
  auto nbrs = [&](int node) {
    std::vector<int> r;
    if (node < nb) {
      for (int v : blocks[node])
        if (blocks_of[v].size() > 1) r.push_back(nb + v);
    } else {
      r = blocks_of[node - nb];
    }
    return r;
  };
  int src = node_of(s), dst = node_of(t);
  std::map<int, int> parent{{src, -1}};
  std::deque<int> q{src};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == dst) break;
    for (int y : nbrs(x))
      if (!parent.count(y)) {
        parent[y] = x;
        q.push_back(y);
      }
  }
  std::vector<int> path;
  for (int x = dst; x != -1; x = parent.at(x)) path.push_back(x);
  std::reverse(path.begin(), path.end());
  int entry = s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= nb) {
      entry = path[i] - nb;
      continue;
    }
    int exit = t;
    if (i + 1 < path.size()) exit = path[i + 1] - nb;
    out.blocks.push_back({blocks[path[i]], entry, exit});
  }
  return out;
}

}  // namespace mrp
