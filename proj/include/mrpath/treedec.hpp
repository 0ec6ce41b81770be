#ifndef MRPATH_TREEDEC_HPP
#define MRPATH_TREEDEC_HPP

#include <string>
#include <vector>

#include "mrpath/graph.hpp"

namespace mrp {

// parent[i] == -1 marks the root; bags are sorted.
struct TreeDecomposition {
  std::vector<int> parent;
  std::vector<std::vector<int>> bags;
  int width() const;
  bool operator==(const TreeDecomposition&) const = default;
};

// Empty result means valid. claimed_width < 0 skips the width check.
std::vector<std::string> validate_td(const Graph& g, const TreeDecomposition& td, int claimed_width = -1);

// Bag of v = v plus its neighbors at elimination time.
TreeDecomposition td_from_ordering(const Graph& g, const std::vector<int>& order);
std::vector<int> greedy_ordering(const Graph& g);
// Contraction degeneracy, a lower bound on treewidth.
int treewidth_lower_bound(const Graph& g);

struct TreewidthResult {
  enum class Kind { decomposition, exceeds, incomplete };
  Kind kind = Kind::incomplete;
  TreeDecomposition td;
  std::string reason;
};

inline constexpr int kExactTreewidthLimit = 30;

// Width <= 2w+1, or a proof-backed Exceeds(w), or Incomplete on large inputs.
TreewidthResult treewidth_decompose(const Graph& g, int w);
// Exact treewidth for small graphs (n <= kExactTreewidthLimit).
int exact_treewidth(const Graph& g);

enum class NiceKind { leaf, insert, forget, join };

struct NiceNode {
  NiceKind kind = NiceKind::leaf;
  int v = -1;  // inserted or forgotten vertex
  std::vector<int> children;
  std::vector<int> bag;  // sorted
};

// Nodes are stored children before parents; the root is the last node.
struct NiceTreeDecomposition {
  std::vector<NiceNode> nodes;
  int s = -1;
  int t = -1;
  int root() const { return static_cast<int>(nodes.size()) - 1; }
  int width() const;
};

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g, int s, int t);
std::vector<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

const char* kind_name(NiceKind k);

}  // namespace mrp

#endif
