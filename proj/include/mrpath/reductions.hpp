#ifndef MRPATH_REDUCTIONS_HPP
#define MRPATH_REDUCTIONS_HPP

#include <map>
#include <vector>

#include "mrpath/framework.hpp"

namespace mrp {

// Uniform matroid U(k, n): Vandermonde columns (1, a, a^2, ...) over the smallest prime above n.
LinearMatroid uniform_matroid(const std::vector<int>& ground, int k);
Framework reduce_longest_path(const Graph& g, int s, int t, int k);

// One framework per edge st of g, on g minus that edge; terminals get standard basis columns.
struct TCycleInstance {
  int s, t;
  Framework framework;
};
std::vector<TCycleInstance> reduce_t_cycle(const Graph& g, const std::vector<int>& terminals);

// Partition matroid: column of v is the indicator of its color.
LinearMatroid partition_matroid(const std::vector<int>& ground, const std::map<int, int>& color);
Framework reduce_colored_path(const Graph& g, int s, int t, const std::map<int, int>& color, int k);

}  // namespace mrp

#endif
