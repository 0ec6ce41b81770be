#include <algorithm>
#include <map>
#include <stdexcept>

#include "mrpath/wall.hpp"

namespace mrp {

namespace {

bool avoids(const std::vector<int>& compass, const std::vector<int>& avoid) {
  return std::none_of(avoid.begin(), avoid.end(),
                      [&](int v) { return std::binary_search(compass.begin(), compass.end(), v); });
}

// Walks a boundary side from corner c through first; stops at the next degree-2 vertex.
std::vector<int> walk_side(const Graph& g, int c, int first) {
  std::vector<int> side{c, first};
  while (g.degree(side.back()) != 2) {
    int next = -1;
    for (int w : g.neighbors(side.back()))
      if (w != side[side.size() - 2] && g.degree(w) <= 3 && std::find(side.begin(), side.end(), w) == side.end()) {
        if (next >= 0) return {};
        next = w;
      }
    if (next < 0) return {};
    side.push_back(next);
  }
  return side;
}

}  // namespace

std::optional<WallModel> find_subwall(const Graph& g, const WallModel& w, int q, const std::vector<int>& avoid) {
  auto ok = [&](const WallModel& cand) { return validate_wall(g, cand).empty() && avoids(compass_of(g, cand), avoid); };
  if (w.height >= q && ok(w)) return w;
  if (q < 3 || q % 2 == 0 || w.height <= q) return std::nullopt;
  for (int y0 = 1; y0 + q - 1 <= w.height; ++y0)
    for (int x0 = 1; x0 + 2 * q - 1 <= 2 * w.height; ++x0) {
      if (!subwall_fits(w.height, x0, y0, q)) continue;
      auto sub = subwall(w, x0, y0, q);
      if (ok(sub)) return sub;
    }
  return std::nullopt;
}

std::optional<WallModel> wall_from_grid(const Graph& g) {
  auto vs = g.vertices();
  std::vector<int> corners;
  for (int v : vs) {
    int d = g.degree(v);
    if (d < 2 || d > 4) return std::nullopt;
    if (d == 2) corners.push_back(v);
  }
  if (corners.size() != 4) return std::nullopt;
  const int c = corners[0];
  auto row = walk_side(g, c, g.neighbors(c)[0]);
  auto col = walk_side(g, c, g.neighbors(c)[1]);
  if (row.size() < 3 || col.size() < 3) return std::nullopt;
  const int a = static_cast<int>(row.size()), b = static_cast<int>(col.size());
  if (static_cast<long>(a) * b != g.num_vertices()) return std::nullopt;
  std::vector<std::vector<int>> at(a, std::vector<int>(b, -1));
  std::map<int, int> seen;
  for (int i = 0; i < a; ++i) at[i][0] = row[i];
  for (int j = 0; j < b; ++j) at[0][j] = col[j];
  for (int i = 0; i < a; ++i) seen[row[i]] = 1;
  for (int j = 0; j < b; ++j) seen[col[j]] = 1;
  for (int j = 1; j < b; ++j)
    for (int i = 1; i < a; ++i) {
      int found = -1;
      for (int u : g.neighbors(at[i - 1][j])) {
        if (u == at[i - 1][j - 1] || !g.has_edge(u, at[i][j - 1])) continue;
        if (found >= 0) return std::nullopt;
        found = u;
      }
      if (found < 0 || (seen.count(found) && !(j == b - 1 || i == a - 1))) return std::nullopt;
      if (i == a - 1 && j == b - 1) {
        if (g.degree(found) != 2) return std::nullopt;
      } else if (seen.count(found)) {
        return std::nullopt;
      }
      at[i][j] = found;
      seen[found] = 1;
    }
  if (static_cast<int>(seen.size()) != g.num_vertices() || g.num_edges() != a * (b - 1) + b * (a - 1))
    return std::nullopt;
  // Lay the wall along the longer side.
  const bool wide = std::min(a / 2, b) >= std::min(b / 2, a);
  int h = wide ? std::min(a / 2, b) : std::min(b / 2, a);
  if (h % 2 == 0) --h;
  if (h < 3) return std::nullopt;
  WallModel w;
  w.height = h;
  for (auto [x, y] : wall_positions(h)) w.branch[{x, y}] = wide ? at[x - 1][y - 1] : at[y - 1][x - 1];
  if (!validate_wall(g, w).empty()) return std::nullopt;
  return w;
}

FindWallResult find_wall(const Graph& g, int q, const std::optional<WallModel>& certificate,
                         const std::vector<int>& avoid) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("wall height must be odd and at least 3");
  if (!planar_embed(g)) throw std::invalid_argument("graph is not planar");
  FindWallResult res;
  if (certificate) {
    if (auto w = find_subwall(g, *certificate, q, avoid)) {
      res.kind = FindWallResult::Kind::wall;
      res.wall = *w;
      return res;
    }
  }
  auto tw = treewidth_decompose(g, (9 * q - 1) / 2);
  if (tw.kind == TreewidthResult::Kind::decomposition && validate_td(g, tw.td, 9 * q).empty()) {
    res.kind = FindWallResult::Kind::decomposition;
    res.td = std::move(tw.td);
    return res;
  }
  if (auto grid = wall_from_grid(g)) {
    if (auto w = find_subwall(g, *grid, q, avoid)) {
      res.kind = FindWallResult::Kind::wall;
      res.wall = *w;
      return res;
    }
  }
  res.reason = certificate ? "certificate has no usable subwall of height " + std::to_string(q)
                           : "no wall certificate and the graph is not a recognizable grid";
  if (tw.kind == TreewidthResult::Kind::incomplete) res.reason += "; treewidth: " + tw.reason;
  return res;
}

}  // namespace mrp
