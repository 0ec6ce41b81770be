#ifndef MRPATH_ORACLE_HPP
#define MRPATH_ORACLE_HPP

#include <stdexcept>
#include <vector>

#include "mrpath/framework.hpp"

namespace mrp {

struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  bool yes = false;
  bool complete = true;  // false when exact_search ran out of budget
  int best_rank = -1;    // -1 if no (s,t)-path exists
  std::vector<int> path;
  long nodes = 0;        // complete paths for brute_force, search nodes for exact_search
};

inline constexpr int kOracleLimit = 15;

// All simple (s,t)-paths, ascending-id branching; the path is the first maximizer of rank(V(P)).
OracleResult brute_force(const Framework& f, int limit = kOracleLimit);
// Same decision via the subset form: some path holds an independent k-set.
bool brute_force_subset_form(const Framework& f, int limit = kOracleLimit);
// Decision-only DFS pruned by rank(path + vertices still reachable); stops at the first witness.
OracleResult exact_search(const Framework& f, long node_budget = 20000000);

// Exhaustive over all Y with |Y| <= q.
bool check_representative(const LinearMatroid& m, const std::vector<GroundSubset>& family,
                          const std::vector<GroundSubset>& sub, int q);
// Exhaustive over all subsets of size <= k+1.
bool check_truncation(const LinearMatroid& m, const LinearMatroid& mt, int k);

inline constexpr int kCheckerLimit = 12;

}  // namespace mrp

#endif
