#include <algorithm>
#include <stdexcept>

#include "mrpath/reductions.hpp"

namespace mrp {

LinearMatroid uniform_matroid(const std::vector<int>& ground, int k) {
  const int n = static_cast<int>(ground.size());
  if (k < 0 || k > n) throw std::invalid_argument("uniform matroid needs 0 <= k <= n");
  const FieldTag f = FieldTag::prime_field(next_prime_above(static_cast<std::uint64_t>(n)));
  ExactMatrix a(k, n, f);
  for (int j = 0; j < n; ++j) {
    Scalar x = Scalar::from_int(f, j), pw = Scalar::one(f);
    for (int i = 0; i < k; ++i) {
      a.set(i, j, pw);
      pw = pw * x;
    }
  }
  return LinearMatroid(ground, std::move(a));
}

Framework reduce_longest_path(const Graph& g, int s, int t, int k) {
  // k above n is a plain NO; keep k and cap the matroid rank
  const int n = g.num_vertices();
  return {g, uniform_matroid(g.vertices(), std::clamp(k, 0, n)), s, t, k};
}

std::vector<TCycleInstance> reduce_t_cycle(const Graph& g, const std::vector<int>& terminals) {
  auto ground = g.vertices();
  std::vector<int> ts = terminals;
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  const FieldTag f = FieldTag::prime_field(next_prime_above(ground.size()));
  ExactMatrix a(static_cast<int>(ts.size()), static_cast<int>(ground.size()), f);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    auto it = std::lower_bound(ground.begin(), ground.end(), ts[i]);
    if (it == ground.end() || *it != ts[i]) throw std::invalid_argument("terminal is not a vertex");
    a.set(static_cast<int>(i), static_cast<int>(it - ground.begin()), Scalar::one(f));
  }
  LinearMatroid m(ground, std::move(a));
  std::vector<TCycleInstance> out;
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    out.push_back({u, v, {std::move(h), m, u, v, static_cast<int>(ts.size())}});
  }
  return out;
}

LinearMatroid partition_matroid(const std::vector<int>& ground, const std::map<int, int>& color) {
  std::vector<int> labels;
  for (int v : ground) {
    auto it = color.find(v);
    if (it == color.end()) throw std::invalid_argument("vertex " + std::to_string(v) + " has no color");
    labels.push_back(it->second);
  }
  std::vector<int> classes = labels;
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  const FieldTag f = FieldTag::prime_field(next_prime_above(ground.size()));
  ExactMatrix a(static_cast<int>(classes.size()), static_cast<int>(ground.size()), f);
  for (std::size_t j = 0; j < ground.size(); ++j) {
    int row = static_cast<int>(std::lower_bound(classes.begin(), classes.end(), labels[j]) - classes.begin());
    a.set(row, static_cast<int>(j), Scalar::one(f));
  }
  return LinearMatroid(ground, std::move(a));
}

Framework reduce_colored_path(const Graph& g, int s, int t, const std::map<int, int>& color, int k) {
  return {g, partition_matroid(g.vertices(), color), s, t, k};
}

}  // namespace mrp
