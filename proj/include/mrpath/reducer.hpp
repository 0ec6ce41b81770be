#ifndef MRPATH_REDUCER_HPP
#define MRPATH_REDUCER_HPP

#include <optional>
#include <string>
#include <vector>

#include "mrpath/framework.hpp"
#include "mrpath/treedec.hpp"
#include "mrpath/wall.hpp"

namespace mrp {

// Values past the saturation point mean "astronomically large".
inline constexpr long kConstantSaturation = 1L << 40;

struct ReductionConstants {
  bool paper = true;
  long b = 0, x = 0, z = 0, q = 0, r = 0, g = 0;
};

// h(k) = 2k(k+2) + 2k + 1.
long rerouting_height(int k);
ReductionConstants constants_for(int k);
ReductionConstants relaxed_constants(long b, long x, long z, long q, long r);
// Small constants that make the reduction reachable on desk-sized walls.
ReductionConstants default_relaxed(int k);
// Parses "paper" or "relaxed:b,x,z,q,r".
ReductionConstants parse_constants(const std::string& spec, int k);

struct ReduceOutcome {
  enum class Kind { path_found, irrelevant, below_threshold, incomplete };
  Kind kind = Kind::incomplete;
  std::vector<int> path;
  GroundSubset independent_set;
  int vertex = -1;
  TreeDecomposition td;
  std::string reason;
};

const char* outcome_name(ReduceOutcome::Kind k);

ReduceOutcome reduce_once(const Framework& f, const ReductionConstants& c,
                          const std::optional<WallModel>& certificate = std::nullopt);

struct ReduceLoopOptions {
  bool verify_deletions = false;  // brute-force replay while the graph is small enough
  int max_iterations = -1;
};

struct ReduceLoopResult {
  ReduceOutcome last;
  Framework reduced;
  std::vector<int> deletions;
  int replay_checks = 0;
  int replay_mismatches = 0;
};

ReduceLoopResult reduce_loop(const Framework& f, const ReductionConstants& c,
                             const std::optional<WallModel>& certificate = std::nullopt,
                             const ReduceLoopOptions& opt = {});

}  // namespace mrp

#endif
