#ifndef MRPATH_SEMIMATCHING_HPP
#define MRPATH_SEMIMATCHING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrpath/graph.hpp"

namespace mrp {

// Sorted elements; a pair (a,b) has a < b, a singleton {v} is stored as (v,v).
struct SemiMatching {
  std::vector<std::pair<int, int>> elems;
  auto operator<=>(const SemiMatching&) const = default;
  bool operator==(const SemiMatching&) const = default;
};

SemiMatching sm_make(std::vector<std::pair<int, int>> elems);
// Pairs of the auxiliary graph H; singletons are added for uncovered base vertices.
// Nullopt if H is not simple, not acyclic or has a vertex of degree > 2.
std::optional<SemiMatching> sm_from_pairs(std::vector<std::pair<int, int>> pairs, const std::vector<int>& base);
bool sm_valid(const SemiMatching& m);
std::vector<int> sm_cover(const SemiMatching& m);
int sm_degree(const SemiMatching& m, int v);
std::vector<std::pair<int, int>> sm_pairs(const SemiMatching& m);
std::string sm_str(const SemiMatching& m);

// (M \ M^(v)) plus {u} for every removed pair {u,v} whose u is left uncovered.
SemiMatching sm_rem(const SemiMatching& m, int v);
// All m' over U(m) + v with rem(m', v) = m.
std::vector<SemiMatching> sm_add(const SemiMatching& m, int v);
// All m' over U(m) + v in which v is internal and merging its two pairs gives m.
std::vector<SemiMatching> sm_forget_predecessors(const SemiMatching& m, int v);
// Merge the two pairs at an internal v; nullopt if v is not internal or the merge is invalid.
std::optional<SemiMatching> sm_merge(const SemiMatching& m, int v);
// All ordered bipartitions of the elements.
std::vector<std::pair<SemiMatching, SemiMatching>> sm_xi(const SemiMatching& m);

// Signature of a linear forest f (a subgraph of g) with respect to x; base is x ∩ V(f).
std::optional<SemiMatching> sig_of_forest(const Graph& g, const std::vector<int>& x, const Graph& f);

}  // namespace mrp

#endif
