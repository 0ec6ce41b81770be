#ifndef MRPATH_GENERATORS_HPP
#define MRPATH_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "mrpath/io.hpp"

namespace mrp {

// "<kind>[:a[:b]][@field]" with kind random:rows, uniform:rank, partition:colors, zero,
// sparse:rows:count (count random vertices get random columns, the rest are zero);
// field is gfp<p> or rational, default gfp101.
struct MatroidSpec {
  enum class Kind { random, uniform, partition, zero, sparse };
  Kind kind = Kind::random;
  int rows = 3;
  int count = 0;
  FieldTag field = FieldTag::prime_field(101);
};

MatroidSpec parse_matroid_spec(const std::string& text);
std::string matroid_spec_str(const MatroidSpec& m);

Scalar random_scalar(FieldTag f, std::mt19937_64& rng);
LinearMatroid random_matroid(const std::vector<int>& ground, int rows, FieldTag f, std::mt19937_64& rng);
LinearMatroid make_matroid(const std::vector<int>& ground, const MatroidSpec& spec, std::mt19937_64& rng);

// Spanning subgraph of a triangulated grid; each edge kept with probability density.
InstanceBundle gen_random_planar(int n, double density, const MatroidSpec& spec, int k, std::uint64_t seed);
// Height-h wall, edges subdivided up to max_extra times, s and t hung off opposite corners.
InstanceBundle gen_wall_instance(int h, const MatroidSpec& spec, int k, std::uint64_t seed, int max_extra = 0);

}  // namespace mrp

#endif
