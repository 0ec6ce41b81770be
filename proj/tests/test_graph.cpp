#include <set>

#include "doctest.h"
#include "helpers.hpp"

using namespace mrp;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Smallest vertex set (avoiding a and b) separating a from b; brute force.
int naive_separator(const Graph& g, int a, int b) {
  if (g.has_edge(a, b)) return 1 << 20;
  std::vector<int> others;
  for (int v : g.vertices())
    if (v != a && v != b) others.push_back(v);
  for (int sz = 0; sz <= static_cast<int>(others.size()); ++sz) {
    bool found = false;
    testkit::for_each_subset(static_cast<int>(others.size()), sz, [&](const std::vector<int>& idx) {
      if (found) return;
      std::vector<char> blocked(g.id_bound(), 0);
      for (int i : idx) blocked[others[i]] = 1;
      auto r = reachable(g, a, &blocked);
      if (std::find(r.begin(), r.end(), b) == r.end()) found = true;
    });
    if (found) return sz;
  }
  return 1 << 20;
}

}  // namespace

TEST_CASE("graph editing") {
  Graph g(4);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  CHECK(g.num_edges() == 3);
  g.remove_vertex(1);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 1);
  CHECK_FALSE(g.has_vertex(1));
  CHECK(g.id_bound() == 4);
  g.add_vertex(7);
  CHECK(g.has_vertex(7));
  CHECK(g.vertices() == std::vector<int>{0, 2, 3, 7});
  auto h = g.induced({2, 3});
  CHECK(h.num_edges() == 1);
  CHECK(h.num_vertices() == 2);
}

TEST_CASE("paths and components") {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 3);
  g.add_edge(3, 2);
  g.add_edge(4, 5);
  CHECK(shortest_path(g, 0, 2) == std::vector<int>{0, 1, 2});
  std::vector<char> blocked(6, 0);
  blocked[1] = 1;
  CHECK(shortest_path(g, 0, 2, &blocked) == std::vector<int>{0, 3, 2});
  CHECK_FALSE(shortest_path(g, 0, 4).has_value());
  CHECK(connected_components(g).size() == 2);
  CHECK(is_simple_path(g, {0, 1, 2, 3}));
  CHECK_FALSE(is_simple_path(g, {0, 1, 0}));
  CHECK_FALSE(is_simple_path(g, {0, 2}));
}

TEST_CASE("planarity") {
  CHECK(planar_embed(complete(4)).has_value());
  CHECK_FALSE(planar_embed(complete(5)).has_value());
  Graph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  CHECK_FALSE(planar_embed(k33).has_value());
  auto rot = planar_embed(complete(4));
  CHECK(count_faces(complete(4), *rot) == 4);
}

TEST_CASE("property: embeddings of planar graphs satisfy Euler") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = testkit::random_planar_graph(testkit::rand_int(rng, 1, 30), 0.7, rng);
    auto rot = planar_embed(g);
    REQUIRE(rot.has_value());
    CHECK(euler_check(g, *rot));
    for (int v : g.vertices()) {
      auto a = rot->order.at(v), b = g.neighbors(v);
      std::sort(a.begin(), a.end());
      CHECK(a == b);
    }
  }
}

TEST_CASE("biconnected split of a chain of blocks") {
  // triangle 0-1-2, bridge 2-3, triangle 3-4-5, pendant 6 on 1
  Graph g(7);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}, {1, 6}})
    g.add_edge(u, v);
  auto split = biconnected_split(g, 0, 5);
  CHECK_FALSE(split.no_path);
  REQUIRE(split.blocks.size() == 3);
  CHECK(split.blocks[0].vertices == std::vector<int>{0, 1, 2});
  CHECK(split.blocks[0].s == 0);
  CHECK(split.blocks[0].t == 2);
  CHECK(split.blocks[1].vertices == std::vector<int>{2, 3});
  CHECK(split.blocks[2].t == 5);
  CHECK(biconnected_components(g).size() == 4);
  g.remove_edge(2, 3);
  CHECK(biconnected_split(g, 0, 5).no_path);
}

TEST_CASE("property: disjoint paths meet the separator bound") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    int n = testkit::rand_int(rng, 3, 10);
    auto g = testkit::random_planar_graph(n, 0.8, rng);
    int a = testkit::rand_int(rng, 0, n - 1), b;
    do b = testkit::rand_int(rng, 0, n - 1);
    while (b == a);
    if (g.has_edge(a, b)) continue;
    int want = naive_separator(g, a, b);
    auto r = vertex_disjoint_paths(g, {a}, {b}, want);
    CHECK(r.found);
    std::set<int> used;
    for (const auto& p : r.paths) {
      CHECK(is_simple_path(g, p));
      CHECK(p.front() == a);
      CHECK(p.back() == b);
      for (std::size_t i = 1; i + 1 < p.size(); ++i) CHECK(used.insert(p[i]).second);
    }
    auto more = vertex_disjoint_paths(g, {a}, {b}, want + 1);
    CHECK_FALSE(more.found);
    CHECK(static_cast<int>(more.separator.size()) == want);
  }
}
