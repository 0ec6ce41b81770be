#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "mrpath/wall.hpp"

namespace mrp {

namespace {

bool present(int h, Pos p) {
  auto [x, y] = p;
  if (x < 1 || x > 2 * h || y < 1 || y > h) return false;
  return p != Pos{2 * h, 1} && p != Pos{1, h};
}

using PosAdj = std::map<Pos, std::set<Pos>>;

PosAdj position_graph(int h) {
  PosAdj adj;
  for (auto p : wall_positions(h)) adj[p];
  for (auto [a, b] : wall_edges(h)) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  return adj;
}

void prune_low_degree(PosAdj& adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = adj.begin(); it != adj.end();) {
      if (it->second.size() <= 1) {
        for (auto q : it->second) adj[q].erase(it->first);
        it = adj.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
}

// Boundary walk of the face with the largest area under the straight-line drawing.
std::vector<Pos> outer_face(const PosAdj& adj) {
  std::map<Pos, std::vector<Pos>> rot;
  for (const auto& [p, nb] : adj) {
    std::vector<Pos> order(nb.begin(), nb.end());
    std::sort(order.begin(), order.end(), [&](Pos a, Pos b) {
      return std::atan2(a.second - p.second, a.first - p.first) < std::atan2(b.second - p.second, b.first - p.first);
    });
    rot[p] = order;
  }
  std::set<std::pair<Pos, Pos>> used;
  std::vector<Pos> best;
  double best_area = -1;
  for (const auto& [u, nb] : adj)
    for (auto v : nb) {
      if (used.count({u, v})) continue;
      std::vector<Pos> face;
      Pos a = u, b = v;
      double area = 0;
      while (!used.count({a, b})) {
        used.insert({a, b});
        face.push_back(a);
        area += static_cast<double>(a.first) * b.second - static_cast<double>(b.first) * a.second;
        const auto& r = rot[b];
        auto pos = std::find(r.begin(), r.end(), a) - r.begin();
        Pos c = r[(pos + r.size() - 1) % r.size()];
        a = b;
        b = c;
      }
      if (std::abs(area) > best_area) {
        best_area = std::abs(area);
        best = face;
      }
    }
  return best;
}

struct LayerData {
  std::vector<std::vector<Pos>> layers;
  std::vector<std::vector<Pos>> inner;
};

const LayerData& layer_data(int h) {
  static std::map<int, LayerData> cache;
  auto it = cache.find(h);
  if (it != cache.end()) return it->second;
  LayerData d;
  PosAdj adj = position_graph(h);
  while (true) {
    prune_low_degree(adj);
    if (adj.empty()) break;
    std::vector<Pos> snapshot;
    for (const auto& [p, nb] : adj) snapshot.push_back(p);
    auto face = outer_face(adj);
    // Orient counterclockwise starting from the smallest position.
    auto mn = std::min_element(face.begin(), face.end()) - face.begin();
    std::rotate(face.begin(), face.begin() + mn, face.end());
    d.layers.push_back(face);
    d.inner.push_back(snapshot);
    for (auto p : face) {
      for (auto q : adj[p]) adj[q].erase(p);
      adj.erase(p);
    }
  }
  return cache.emplace(h, std::move(d)).first->second;
}

PosEdge edge_key(Pos a, Pos b) { return a < b ? PosEdge{a, b} : PosEdge{b, a}; }

// Host path realizing the elementary edge a-b, oriented from a to b, endpoints included.
std::vector<int> realize_edge(const WallModel& w, Pos a, Pos b) {
  std::vector<int> out{w.branch.at(a)};
  auto it = w.subdiv.find(edge_key(a, b));
  if (it != w.subdiv.end()) {
    if (a < b) out.insert(out.end(), it->second.begin(), it->second.end());
    else out.insert(out.end(), it->second.rbegin(), it->second.rend());
  }
  out.push_back(w.branch.at(b));
  return out;
}

std::vector<int> realize_cycle(const WallModel& w, const std::vector<Pos>& cyc) {
  std::vector<int> out;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    auto seg = realize_edge(w, cyc[i], cyc[(i + 1) % cyc.size()]);
    out.insert(out.end(), seg.begin(), seg.end() - 1);
  }
  return out;
}

bool cycle_in_graph(const Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 3) return false;
  std::vector<int> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cyc.size(); ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()])) return false;
  return true;
}

}  // namespace

std::vector<Pos> wall_positions(int h) {
  std::vector<Pos> out;
  for (int x = 1; x <= 2 * h; ++x)
    for (int y = 1; y <= h; ++y)
      if (present(h, {x, y})) out.push_back({x, y});
  return out;
}

std::vector<PosEdge> wall_edges(int h) {
  std::vector<PosEdge> out;
  for (auto p : wall_positions(h)) {
    auto [x, y] = p;
    if (present(h, {x + 1, y})) out.push_back({p, {x + 1, y}});
    if ((x + y) % 2 == 0 && present(h, {x, y + 1})) out.push_back({p, {x, y + 1}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int elementary_degree(int h, Pos p) {
  auto [x, y] = p;
  int d = 0;
  if (present(h, {x + 1, y})) ++d;
  if (present(h, {x - 1, y})) ++d;
  if ((x + y) % 2 == 0 && present(h, {x, y + 1})) ++d;
  if ((x + y - 1) % 2 == 0 && present(h, {x, y - 1})) ++d;
  return present(h, p) ? d : 0;
}

const std::vector<std::vector<Pos>>& wall_layer_positions(int h) { return layer_data(h).layers; }
const std::vector<std::vector<Pos>>& wall_inner_positions(int h) { return layer_data(h).inner; }
int layer_count(int h) { return static_cast<int>(layer_data(h).layers.size()); }

BuiltWall build_elementary_wall(int h, int first_id) {
  if (h < 3 || h % 2 == 0) throw std::invalid_argument("wall height must be odd and at least 3");
  BuiltWall out;
  out.wall.height = h;
  std::vector<Pos> order = wall_positions(h);
  std::sort(order.begin(), order.end(), [](Pos a, Pos b) { return std::tie(a.second, a.first) < std::tie(b.second, b.first); });
  int id = first_id;
  for (auto p : order) {
    out.graph.add_vertex(id);
    out.wall.branch[p] = id++;
  }
  for (auto [a, b] : wall_edges(h)) out.graph.add_edge(out.wall.branch[a], out.wall.branch[b]);
  return out;
}

BuiltWall subdivide_wall(const Graph& g, const WallModel& w, const std::map<PosEdge, int>& scheme) {
  BuiltWall out{g, w};
  int next = g.id_bound();
  for (auto [e, extra] : scheme) {
    if (extra <= 0) continue;
    auto path = realize_edge(out.wall, e.first, e.second);
    // Insert the new vertices next to the second endpoint.
    int a = path[path.size() - 2], b = path.back();
    out.graph.remove_edge(a, b);
    auto& inner = out.wall.subdiv[e];
    int prev = a;
    for (int i = 0; i < extra; ++i) {
      out.graph.add_vertex(next);
      out.graph.add_edge(prev, next);
      inner.push_back(next);
      prev = next++;
    }
    out.graph.add_edge(prev, b);
  }
  return out;
}

std::map<PosEdge, int> random_subdivision_scheme(int h, int max_extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<PosEdge, int> out;
  for (auto e : wall_edges(h)) {
    int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(max_extra + 1));
    if (extra > 0) out[e] = extra;
  }
  return out;
}

std::vector<int> wall_vertices(const WallModel& w) {
  std::vector<int> out;
  for (const auto& [p, v] : w.branch) out.push_back(v);
  for (const auto& [e, path] : w.subdiv) out.insert(out.end(), path.begin(), path.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> layer_cycle(const WallModel& w, int i) {
  const auto& layers = wall_layer_positions(w.height);
  if (i < 1 || i > static_cast<int>(layers.size())) throw std::out_of_range("layer index");
  return realize_cycle(w, layers[i - 1]);
}

std::vector<int> inner_wall_vertices(const WallModel& w, int i) {
  const auto& inner = wall_inner_positions(w.height);
  if (i < 1 || i > static_cast<int>(inner.size())) throw std::out_of_range("layer index");
  std::set<Pos> keep(inner[i - 1].begin(), inner[i - 1].end());
  std::vector<int> out;
  for (auto p : keep) out.push_back(w.branch.at(p));
  for (const auto& [e, path] : w.subdiv)
    if (keep.count(e.first) && keep.count(e.second)) out.insert(out.end(), path.begin(), path.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> compass_of(const Graph& g, const WallModel& w, int i) {
  auto perim = layer_cycle(w, i);
  std::vector<char> blocked(g.id_bound(), 0);
  for (int v : perim) blocked[v] = 1;
  std::set<int> out(perim.begin(), perim.end());
  for (int v : inner_wall_vertices(w, i)) {
    if (blocked[v] || out.count(v) || !g.has_vertex(v)) continue;
    for (int u : reachable(g, v, &blocked)) out.insert(u);
  }
  return {out.begin(), out.end()};
}

int rho(const Framework& f, const WallModel& w, int i) {
  GroundSubset s;
  for (int v : compass_of(f.graph, w, i))
    if (f.matroid.contains(v)) s.push_back(v);
  return rank(f.matroid, s);
}

std::vector<std::string> validate_wall(const Graph& g, const WallModel& w) {
  std::vector<std::string> out;
  const int h = w.height;
  if (h < 3 || h % 2 == 0) return {"bad height"};
  auto pos = wall_positions(h);
  std::vector<Pos> keys;
  for (const auto& [p, v] : w.branch) keys.push_back(p);
  if (keys != pos) return {"branch map incomplete"};
  auto edges = wall_edges(h);
  for (const auto& [e, path] : w.subdiv)
    if (!std::binary_search(edges.begin(), edges.end(), e)) return {"unknown subdivided edge"};
  auto all = wall_vertices(w);
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) out.push_back("vertex reused");
  for (int v : all)
    if (!g.has_vertex(v)) {
      out.push_back("vertex missing from host");
      break;
    }
  std::map<int, int> deg;
  bool missing = false;
  for (auto [a, b] : edges) {
    auto path = realize_edge(w, a, b);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.has_edge(path[i], path[i + 1])) missing = true;
      ++deg[path[i]];
      ++deg[path[i + 1]];
    }
  }
  if (missing) out.push_back("edge path missing");
  for (const auto& [p, v] : w.branch)
    if (deg[v] != elementary_degree(h, p)) {
      out.push_back("branch degree");
      break;
    }
  if (!cycle_in_graph(g, layer_cycle(w, 1))) out.push_back("perimeter not a cycle");
  if (!out.empty()) return out;
  const int nl = layer_count(h);
  if (nl != h / 2) out.push_back("layer count");
  for (int i = 1; i < nl; ++i) {
    auto outer = layer_cycle(w, i), inner = layer_cycle(w, i + 1);
    auto comp = compass_of(g, w, i);
    bool ok = cycle_in_graph(g, inner);
    std::set<int> os(outer.begin(), outer.end());
    for (int v : inner)
      if (os.count(v) || !std::binary_search(comp.begin(), comp.end(), v)) ok = false;
    if (!ok) {
      out.push_back("layers not nested");
      break;
    }
  }
  return out;
}

Pos subwall_position(int x0, int y0, int q, Pos p) {
  if ((x0 + y0) % 2 == 0) return {p.first + x0 - 1, p.second + y0 - 1};
  return {x0 + 2 * q - p.first, p.second + y0 - 1};
}

bool subwall_fits(int h, int x0, int y0, int q) {
  if (q < 3 || q % 2 == 0) return false;
  if (x0 < 1 || y0 < 1 || x0 + 2 * q - 1 > 2 * h || y0 + q - 1 > h) return false;
  for (auto p : wall_positions(q))
    if (!present(h, subwall_position(x0, y0, q, p))) return false;
  return true;
}

WallModel subwall(const WallModel& w, int x0, int y0, int q) {
  if (!subwall_fits(w.height, x0, y0, q)) throw std::invalid_argument("subwall does not fit");
  WallModel out;
  out.height = q;
  auto at = [&](Pos p) { return subwall_position(x0, y0, q, p); };
  for (auto p : wall_positions(q)) out.branch[p] = w.branch.at(at(p));
  for (auto [a, b] : wall_edges(q)) {
    Pos ha = at(a), hb = at(b);
    auto it = w.subdiv.find(edge_key(ha, hb));
    if (it == w.subdiv.end()) continue;
    auto path = it->second;
    if (hb < ha) std::reverse(path.begin(), path.end());
    out.subdiv[{a, b}] = std::move(path);
  }
  return out;
}

int central_vertex(const WallModel& w) {
  const auto& layers = wall_layer_positions(w.height);
  const auto& inner = layers.back();
  int best = -1;
  for (auto p : inner)
    if (elementary_degree(w.height, p) == 3) {
      int v = w.branch.at(p);
      if (best < 0 || v < best) best = v;
    }
  if (best < 0)
    for (auto p : inner) best = best < 0 ? w.branch.at(p) : std::min(best, w.branch.at(p));
  return best;
}

}  // namespace mrp
