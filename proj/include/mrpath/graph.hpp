#ifndef MRPATH_GRAPH_HPP
#define MRPATH_GRAPH_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace mrp {

// Simple undirected graph on stable integer ids; ids are never reused.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  void add_vertex(int v);
  // Returns false if the edge already exists.
  bool add_edge(int u, int v);
  void remove_edge(int u, int v);
  void remove_vertex(int v);

  bool has_vertex(int v) const { return v >= 0 && v < id_bound() && present_[v]; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  std::vector<int> vertices() const;
  int num_vertices() const { return nv_; }
  int num_edges() const { return ne_; }
  int id_bound() const { return static_cast<int>(present_.size()); }
  std::vector<std::pair<int, int>> edges() const;
  Graph induced(const std::vector<int>& keep) const;
  bool operator==(const Graph&) const = default;

 private:
  std::vector<char> present_;
  std::vector<std::vector<int>> adj_;
  int nv_ = 0;
  int ne_ = 0;
};

// BFS helpers; all traversals visit neighbors in ascending id order.
std::vector<int> reachable(const Graph& g, int from, const std::vector<char>* blocked = nullptr);
std::vector<std::vector<int>> connected_components(const Graph& g);
std::optional<std::vector<int>> shortest_path(const Graph& g, int a, int b, const std::vector<char>* blocked = nullptr);
bool is_simple_path(const Graph& g, const std::vector<int>& path);

// Per vertex, neighbors in clockwise order.
struct RotationSystem {
  std::map<int, std::vector<int>> order;
  bool operator==(const RotationSystem&) const = default;
};

int count_faces(const Graph& g, const RotationSystem& rot);
// Checks V - E + F = 1 + C.
bool euler_check(const Graph& g, const RotationSystem& rot);
std::optional<RotationSystem> planar_embed(const Graph& g);

struct BlockProblem {
  std::vector<int> vertices;  // sorted
  int s;
  int t;
};
struct BlockSplit {
  bool no_path = false;
  std::vector<BlockProblem> blocks;
};
BlockSplit biconnected_split(const Graph& g, int s, int t);
std::vector<std::vector<int>> biconnected_components(const Graph& g);

struct DisjointPathsResult {
  bool found = false;
  std::vector<std::vector<int>> paths;
  std::vector<int> separator;
};
// Paths from a to b; a singleton side may be shared by all paths, every other vertex is used once.
DisjointPathsResult vertex_disjoint_paths(const Graph& g, const std::vector<int>& a, const std::vector<int>& b, int c,
                                          const std::vector<char>* blocked = nullptr);

}  // namespace mrp

#endif
