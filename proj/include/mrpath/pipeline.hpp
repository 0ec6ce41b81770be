#ifndef MRPATH_PIPELINE_HPP
#define MRPATH_PIPELINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mrpath/dp.hpp"
#include "mrpath/io.hpp"
#include "mrpath/reducer.hpp"

namespace mrp {

struct SolveOptions {
  ReductionConstants constants = default_relaxed(2);
  DPOptions dp;
  // Widest decomposition handed to the DP; wider ones go through the reducer.
  int dp_width_limit = 6;
  int max_iterations = -1;
};

struct SolveResult {
  enum class Verdict { yes, no, incomplete };
  Verdict verdict = Verdict::incomplete;
  std::vector<int> path;
  GroundSubset independent_set;
  std::vector<int> deletions;
  std::vector<std::string> log;
  std::string reason;
};

const char* verdict_name(SolveResult::Verdict v);

// Any (s,t)-path of rank >= 1, found block by block; exact.
SolveResult solve_rank_one(const Framework& f);
// Decompose with the given width target and run the DP.
SolveResult solve_with_dp(const Framework& f, const TreeDecomposition& td, const DPOptions& opt);
SolveResult solve_full(const InstanceBundle& b, const SolveOptions& opt);

}  // namespace mrp

#endif
