#include <algorithm>

#include "mrpath/framework.hpp"

namespace mrp {

std::vector<std::string> validate_framework(const Framework& f) {
  std::vector<std::string> out;
  if (f.graph.vertices() != f.matroid.ground()) out.push_back("matroid ground set differs from vertex set");
  if (f.s == f.t) out.push_back("terminals coincide");
  if (!f.graph.has_vertex(f.s) || !f.graph.has_vertex(f.t)) out.push_back("terminal not a vertex");
  if (f.k < 0) out.push_back("negative k");
  return out;
}

void delete_vertex(Framework& f, int v) {
  if (v == f.s || v == f.t) throw std::invalid_argument("cannot delete a terminal");
  f.graph.remove_vertex(v);
  f.matroid = delete_element(f.matroid, v);
}

bool verify_witness(const Framework& f, const std::vector<int>& path) {
  if (path.empty() || path.front() != f.s || path.back() != f.t) return false;
  if (!is_simple_path(f.graph, path)) return false;
  GroundSubset vs = path;
  std::sort(vs.begin(), vs.end());
  return rank(f.matroid, vs) >= f.k;
}

}  // namespace mrp
