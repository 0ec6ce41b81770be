#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/generators.hpp"
#include "mrpath/io.hpp"
#include "mrpath/treedec.hpp"
#include "mrpath/wall.hpp"

using namespace mrp;

namespace {

Graph grid(int w, int h) {
  Graph g(w * h);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      if (x + 1 < w) g.add_edge(y * w + x, y * w + x + 1);
      if (y + 1 < h) g.add_edge(y * w + x, (y + 1) * w + x);
    }
  return g;
}

bool compasses_disjoint(const Graph& g, const WallPacking& p) {
  std::set<int> seen;
  for (const auto& w : p.walls)
    for (int v : compass_of(g, w))
      if (!seen.insert(v).second) return false;
  return true;
}

}  // namespace

TEST_CASE("elementary wall counts") {
  // positions 2h*h - 2, perimeter 16h - 34
  CHECK(wall_positions(3).size() == 16);
  CHECK(wall_edges(3).size() == 19);
  CHECK(wall_positions(5).size() == 48);
  CHECK(wall_edges(5).size() == 63);
  CHECK(wall_layer_positions(5)[0].size() == 46 - 16);
  CHECK(wall_layer_positions(7)[0].size() == 46);
  CHECK(wall_layer_positions(9)[3].size() == 14);
  CHECK(wall_inner_positions(7)[1].size() == 48);
  CHECK(elementary_degree(5, {1, 1}) == 2);
  CHECK(elementary_degree(5, {2, 2}) == 3);
}

TEST_CASE("property: built walls are valid with floor(h/2) layers") {
  std::mt19937_64 rng(81);
  for (int h : {3, 5, 7, 9}) {
    auto b = build_elementary_wall(h);
    CHECK(validate_wall(b.graph, b.wall).empty());
    CHECK(layer_count(h) == h / 2);
    CHECK(b.graph.num_vertices() == 2 * h * h - 2);
    for (int trial = 0; trial < 3; ++trial) {
      auto scheme = random_subdivision_scheme(h, 2, rng());
      auto s = subdivide_wall(b.graph, b.wall, scheme);
      CHECK(validate_wall(s.graph, s.wall).empty());
      CHECK(layer_count(s.wall.height) == h / 2);
      int extra = 0;
      for (auto& [e, c] : scheme) extra += c;
      CHECK(s.graph.num_vertices() == b.graph.num_vertices() + extra);
      CHECK(layer_cycle(s.wall, 1).size() >= wall_layer_positions(h)[0].size());
    }
  }
}

TEST_CASE("layers nest") {
  auto b = build_elementary_wall(7);
  for (int i = 1; i <= 3; ++i) {
    auto inner = inner_wall_vertices(b.wall, i);
    auto cyc = layer_cycle(b.wall, i);
    std::sort(inner.begin(), inner.end());
    for (int v : cyc) CHECK(std::binary_search(inner.begin(), inner.end(), v));
    if (i < 3) CHECK(inner_wall_vertices(b.wall, i + 1).size() < inner.size());
  }
}

TEST_CASE("validation catches tampering") {
  auto b = build_elementary_wall(5);
  auto g = b.graph;
  g.remove_edge(b.wall.branch.at({1, 1}), b.wall.branch.at({2, 1}));
  CHECK_FALSE(validate_wall(g, b.wall).empty());
  auto w = b.wall;
  w.height = 4;
  CHECK_FALSE(validate_wall(b.graph, w).empty());
  w = b.wall;
  w.branch.erase({3, 3});
  CHECK_FALSE(validate_wall(b.graph, w).empty());
  w = b.wall;
  std::swap(w.branch[{3, 3}], w.branch[{7, 4}]);
  CHECK_FALSE(validate_wall(b.graph, w).empty());
}

TEST_CASE("subwalls") {
  auto b = build_elementary_wall(7);
  CHECK(subwall_fits(7, 1, 1, 3));
  CHECK_FALSE(subwall_fits(7, 10, 1, 3));
  CHECK(subwall_position(1, 1, 3, {2, 2}) == Pos{2, 2});
  CHECK(subwall_position(2, 1, 3, {1, 1}) == Pos{7, 1});
  for (int y0 = 1; y0 <= 5; ++y0)
    for (int x0 = 1; x0 <= 9; ++x0)
      if (subwall_fits(7, x0, y0, 3)) CHECK(validate_wall(b.graph, subwall(b.wall, x0, y0, 3)).empty());
  // the second inner wall of a 5-wall is the reflected 3-wall at (3,2)
  auto five = build_elementary_wall(5);
  auto inner = inner_wall_vertices(five.wall, 2);
  auto sub = wall_vertices(subwall(five.wall, 3, 2, 3));
  std::sort(inner.begin(), inner.end());
  std::sort(sub.begin(), sub.end());
  CHECK(inner == sub);
}

TEST_CASE("compass and rho") {
  auto b = build_elementary_wall(5);
  CHECK(compass_of(b.graph, b.wall, 1).size() == 48);
  CHECK(compass_of(b.graph, b.wall, 2).size() == 16);
  CHECK(central_vertex(b.wall) == 12);
  Framework f;
  f.graph = b.graph;
  auto fld = FieldTag::prime_field(101);
  ExactMatrix a(2, 48, fld);
  a.set(0, 0, Scalar::one(fld));   // (1,1), outer layer only
  a.set(1, 12, Scalar::one(fld));  // central vertex
  auto vs = b.graph.vertices();
  f.matroid = LinearMatroid(vs, a);
  CHECK(rho(f, b.wall, 1) == 2);
  CHECK(rho(f, b.wall, 2) == 1);
}

TEST_CASE("packing bound") {
  CHECK(ceil_sqrt(1) == 1);
  CHECK(ceil_sqrt(4) == 2);
  CHECK(ceil_sqrt(5) == 3);
  CHECK(packing_f(1, 1, 4, 3) == 9);
  CHECK(packing_f(1, 3, 4, 3) == 11);
  CHECK(packing_f(2, 1, 4, 3) == 21);
}

TEST_CASE("grid packing at the bound for z = 1") {
  for (int r : {1, 2, 4})
    for (int q : {3, 5}) {
      int h = static_cast<int>(packing_f(1, 1, r, q));
      if (h % 2 == 0) ++h;
      auto b = build_elementary_wall(h);
      auto p = grid_packing(b.wall, 1, r, q);
      CHECK(p.walls.size() == static_cast<std::size_t>(r));
      CHECK(validate_packing(b.graph, p).empty());
      CHECK(compasses_disjoint(b.graph, p));
    }
}

TEST_CASE("equal rank packing needs rank at most k") {
  auto b = gen_wall_instance(9, parse_matroid_spec("uniform:3"), 2, 1);
  CHECK_THROWS_AS(equal_rank_packing(b.framework, *b.wall, 1, 1, 2, 3), PackingError);
}

TEST_CASE("grid packing rejects short walls") {
  auto b = build_elementary_wall(5);
  CHECK_THROWS_AS(grid_packing(b.wall, 1, 4, 3), PackingError);
}

TEST_CASE("equal rank packing with few rank-carrying vertices") {
  // height f(2) rather than f(1): a rank-one wall may have rank-zero subwalls everywhere at f(1)
  auto b = gen_wall_instance(static_cast<int>(packing_f(2, 1, 2, 3)), parse_matroid_spec("sparse:1:3"), 1, 5);
  REQUIRE(rho(b.framework, *b.wall) <= 1);
  auto p = equal_rank_packing(b.framework, *b.wall, 1, 1, 2, 3);
  CHECK(validate_packing(b.framework.graph, p).empty());
  const int r0 = rho(b.framework, p.w0);
  for (const auto& w : p.walls) CHECK(rho(b.framework, w) == r0);
}

TEST_CASE("find wall paths") {
  auto b = build_elementary_wall(9);
  auto fw = find_wall(b.graph, 5, b.wall);
  REQUIRE(fw.kind == FindWallResult::Kind::wall);
  CHECK(fw.wall.height >= 5);
  CHECK(validate_wall(b.graph, fw.wall).empty());
  auto small = grid(10, 10);
  auto d = find_wall(small, 3);
  REQUIRE(d.kind == FindWallResult::Kind::decomposition);
  CHECK(validate_td(small, d.td, 27).empty());
  auto gw = wall_from_grid(grid(12, 7));
  REQUIRE(gw.has_value());
  CHECK(gw->height % 2 == 1);
  CHECK(validate_wall(grid(12, 7), *gw).empty());
  std::mt19937_64 rng(3);
  CHECK_FALSE(wall_from_grid(testkit::random_planar_graph(12, 0.6, rng)).has_value());
}

TEST_CASE("find wall rejects non-planar input") {
  Graph k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  CHECK_THROWS_AS(find_wall(k5, 3), std::invalid_argument);
}
