#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/treedec.hpp"

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

// Minimum over every elimination order; n <= 8.
int naive_treewidth(const Graph& g) {
  auto order = g.vertices();
  int best = 1 << 20;
  do best = std::min(best, td_from_ordering(g, order).width());
  while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace

TEST_CASE("validator catches each violation") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  TreeDecomposition ok{{-1, 0}, {{0, 1}, {1, 2}}};
  CHECK(validate_td(g, ok).empty());
  CHECK(ok.width() == 1);
  CHECK_FALSE(validate_td(g, ok, 0).empty());
  TreeDecomposition missing_edge{{-1, 0}, {{0, 1}, {2}}};
  CHECK_FALSE(validate_td(g, missing_edge).empty());
  TreeDecomposition disconnected{{-1, 0, 1}, {{0, 1}, {1, 2}, {0}}};
  CHECK_FALSE(validate_td(g, disconnected).empty());
  TreeDecomposition two_roots{{-1, -1}, {{0, 1}, {1, 2}}};
  CHECK_FALSE(validate_td(g, two_roots).empty());
}

TEST_CASE("known treewidths") {
  CHECK(exact_treewidth(grid(4, 4)) == 4);
  CHECK(exact_treewidth(grid(5, 3)) == 3);
  Graph cycle(6);
  for (int i = 0; i < 6; ++i) cycle.add_edge(i, (i + 1) % 6);
  CHECK(exact_treewidth(cycle) == 2);
  Graph k5(5);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) k5.add_edge(i, j);
  CHECK(exact_treewidth(k5) == 4);
  Graph path(5);
  for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
  CHECK(exact_treewidth(path) == 1);
  CHECK(treewidth_lower_bound(grid(4, 4)) <= 4);
}

TEST_CASE("property: exact treewidth against all elimination orders") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    auto g = testkit::random_planar_graph(testkit::rand_int(rng, 2, 7), 0.75, rng);
    int want = naive_treewidth(g);
    CHECK(exact_treewidth(g) == want);
    CHECK(treewidth_lower_bound(g) <= want);
  }
}

TEST_CASE("property: decompose returns valid bounded decompositions") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = testkit::random_planar_graph(testkit::rand_int(rng, 2, 24), 0.8, rng);
    int w = testkit::rand_int(rng, 1, 4);
    auto r = treewidth_decompose(g, w);
    if (r.kind == TreewidthResult::Kind::decomposition) {
      CHECK(validate_td(g, r.td, 2 * w + 1).empty());
    } else if (r.kind == TreewidthResult::Kind::exceeds) {
      CHECK(exact_treewidth(g) > w);
    }
    CHECK(validate_td(g, td_from_ordering(g, greedy_ordering(g))).empty());
  }
}

TEST_CASE("property: nice decompositions") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    int n = testkit::rand_int(rng, 2, 16);
    auto g = testkit::random_planar_graph(n, 0.8, rng);
    int s = 0, t = n - 1;
    auto ntd = make_nice(td_from_ordering(g, greedy_ordering(g)), g, s, t);
    CHECK(validate_nice(g, ntd).empty());
    const auto& root = ntd.nodes[ntd.root()];
    CHECK(root.bag == std::vector<int>{s, t});
    for (const auto& node : ntd.nodes) {
      CHECK(std::binary_search(node.bag.begin(), node.bag.end(), s));
      CHECK(std::binary_search(node.bag.begin(), node.bag.end(), t));
      if (node.kind == NiceKind::leaf) CHECK(node.bag == std::vector<int>{s, t});
      if (node.kind == NiceKind::join) {
        REQUIRE(node.children.size() == 2);
        CHECK(ntd.nodes[node.children[0]].bag == node.bag);
        CHECK(ntd.nodes[node.children[1]].bag == node.bag);
      }
      for (int c : node.children) CHECK(c < static_cast<int>(&node - ntd.nodes.data()));
    }
  }
}

TEST_CASE("kind names") {
  CHECK(std::string(kind_name(NiceKind::join)) == "join");
  CHECK(std::string(kind_name(NiceKind::insert)) == "insert");
}
