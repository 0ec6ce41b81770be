#ifndef MRPATH_FRAMEWORK_HPP
#define MRPATH_FRAMEWORK_HPP

#include <string>
#include <vector>

#include "mrpath/graph.hpp"
#include "mrpath/matroid.hpp"

namespace mrp {

struct Framework {
  Graph graph;
  LinearMatroid matroid;
  int s = 0;
  int t = 1;
  int k = 0;
};

// Empty means the framework invariants hold.
std::vector<std::string> validate_framework(const Framework& f);
// Removes v from both the graph and the matroid.
void delete_vertex(Framework& f, int v);
// Simple path from s to t whose vertex set has rank >= k.
bool verify_witness(const Framework& f, const std::vector<int>& path);

}  // namespace mrp

#endif
