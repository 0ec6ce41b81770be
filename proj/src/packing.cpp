#include <algorithm>
#include <climits>
#include <set>
#include <string>

#include "mrpath/wall.hpp"

namespace mrp {

namespace {

constexpr long kSaturate = LONG_MAX / 8;

// Top-left corners of the tiles for base position (x0, y0), row-major; empty if any of the first r misses.
std::vector<Pos> tiles_at(int h, const std::set<Pos>& region, int x0, int y0, int side, int r, int q) {
  std::vector<Pos> out;
  for (int b = 0; b < side && static_cast<int>(out.size()) < r; ++b)
    for (int a = 0; a < side && static_cast<int>(out.size()) < r; ++a) {
      int x = x0 + 2 * (q + 1) * a, y = y0 + (q + 1) * b;
      if (!subwall_fits(h, x, y, q)) return {};
      for (auto sp : wall_positions(q))
        if (!region.count(subwall_position(x, y, q, sp))) return {};
      out.push_back({x, y});
    }
  return out;
}

std::vector<std::vector<Pos>> all_placements(int h, int z, int r, int q) {
  std::vector<std::vector<Pos>> out;
  if (z + 1 > layer_count(h)) return out;
  const auto& inner = wall_inner_positions(h)[z];
  std::set<Pos> region(inner.begin(), inner.end());
  const int side = ceil_sqrt(r);
  for (int y0 = 1; y0 <= h; ++y0)
    for (int x0 = 1; x0 <= 2 * h; ++x0) {
      auto t = tiles_at(h, region, x0, y0, side, r, q);
      if (!t.empty()) out.push_back(std::move(t));
    }
  return out;
}

WallPacking packing_from(const WallModel& w, int z, int r, int q, const std::vector<Pos>& tiles) {
  WallPacking p{z, r, q, w, {}};
  for (auto [x, y] : tiles) p.walls.push_back(subwall(w, x, y, q));
  return p;
}

bool equal_ranks(const Framework& f, const WallPacking& p) {
  const int r0 = rho(f, p.w0);
  return std::all_of(p.walls.begin(), p.walls.end(), [&](const WallModel& wi) { return rho(f, wi) == r0; });
}

WallPacking equal_rank_rec(const Framework& f, const WallModel& w, int k, int z, int x, int q) {
  if (k > 1) {
    const int inner_h = static_cast<int>(packing_f(k - 1, z, x, q));
    auto p = grid_packing(w, z, x, inner_h);
    const int r0 = rho(f, p.w0);
    for (const auto& wi : p.walls)
      if (rho(f, wi) < r0) return equal_rank_rec(f, wi, k - 1, z, x, q);
    return p;
  }
  auto p = grid_packing(w, z, x, q);
  if (equal_ranks(f, p)) return p;
  // A rank-one wall can still hold rank-zero subwalls; look for another host subwall and placement.
  const int need = static_cast<int>(packing_f(1, z, x, q));
  for (int hh = w.height; hh >= std::max(need, 2 * z); hh -= 2)
    for (int y0 = 1; y0 + hh - 1 <= w.height; ++y0)
      for (int x0 = 1; x0 + 2 * hh - 1 <= 2 * w.height; ++x0) {
        if (!subwall_fits(w.height, x0, y0, hh)) continue;
        WallModel w0 = hh == w.height ? w : subwall(w, x0, y0, hh);
        for (const auto& tiles : all_placements(hh, z, x, q)) {
          auto cand = packing_from(w0, z, x, q, tiles);
          if (equal_ranks(f, cand)) return cand;
        }
      }
  throw PackingError("no equal-rank packing at the base level");
}

}  // namespace

int ceil_sqrt(int r) {
  int c = 0;
  while (c * c < r) ++c;
  return c;
}

long packing_f(int k, int z, int r, int q) {
  long v = z + static_cast<long>(ceil_sqrt(r)) * (q + 1);
  for (int i = 2; i <= k; ++i) {
    v = z + static_cast<long>(ceil_sqrt(r)) * (v + 1);
    if (v > kSaturate) return kSaturate;
  }
  return v;
}

WallPacking grid_packing(const WallModel& w, int z, int r, int q) {
  if (z < 1 || z % 2 == 0 || q < 3 || q % 2 == 0 || r < 1) throw PackingError("bad packing parameters");
  if (w.height < packing_f(1, z, r, q))
    throw PackingError("wall height " + std::to_string(w.height) + " below " + std::to_string(packing_f(1, z, r, q)));
  auto places = all_placements(w.height, z, r, q);
  if (places.empty())
    throw PackingError("no room for " + std::to_string(r) + " subwalls of height " + std::to_string(q) + " inside layer " +
                       std::to_string(z + 1) + " of a height " + std::to_string(w.height) + " wall");
  return packing_from(w, z, r, q, places.front());
}

std::vector<std::string> validate_packing(const Graph& g, const WallPacking& p) {
  std::vector<std::string> out;
  const int h0 = p.w0.height;
  if (h0 % 2 == 0 || h0 < 2 * p.z) out.push_back("host wall height");
  if (!validate_wall(g, p.w0).empty()) return {"host wall invalid"};
  if (static_cast<int>(p.walls.size()) != p.r) out.push_back("wall count");
  if (p.z + 1 > layer_count(h0)) return {"host wall too shallow"};
  auto deep = inner_wall_vertices(p.w0, p.z + 1);
  std::vector<std::vector<int>> comps;
  for (const auto& wi : p.walls) {
    if (wi.height < p.q) out.push_back("subwall height");
    if (!validate_wall(g, wi).empty()) {
      out.push_back("subwall invalid");
      continue;
    }
    for (int v : wall_vertices(wi))
      if (!std::binary_search(deep.begin(), deep.end(), v)) {
        out.push_back("subwall leaves the inner region");
        break;
      }
    comps.push_back(compass_of(g, wi));
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (!disjoint(comps[i], comps[j])) out.push_back("compasses overlap");
  return out;
}

WallPacking equal_rank_packing(const Framework& f, const WallModel& w, int k, int z, int x, int q) {
  if (w.height < packing_f(std::max(k, 1), z, x, q)) throw PackingError("wall height below the recursion bound");
  if (rho(f, w) > k) throw PackingError("wall rank exceeds k");
  try {
    return equal_rank_rec(f, w, k, z, x, q);
  } catch (const PackingError&) {
    // One more level always suffices: each recursion step loses a unit of rank, so the last
    // level sees rank zero everywhere.
    if (w.height < packing_f(k + 1, z, x, q)) throw;
    return equal_rank_rec(f, w, k + 1, z, x, q);
  }
}

}  // namespace mrp
