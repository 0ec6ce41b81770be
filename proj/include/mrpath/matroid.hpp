#ifndef MRPATH_MATROID_HPP
#define MRPATH_MATROID_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mrpath/exactalg.hpp"

namespace mrp {

// Sorted vertex identifiers.
using GroundSubset = std::vector<int>;

class LinearMatroid {
 public:
  LinearMatroid() = default;
  // Column j of a represents ground[j].
  LinearMatroid(std::vector<int> ground, ExactMatrix a);

  const std::vector<int>& ground() const { return ground_; }
  const ExactMatrix& matrix() const { return a_; }
  const FieldTag& field() const { return a_.field(); }
  int rank() const { return rank_; }
  bool contains(int v) const { return col_.count(v) > 0; }
  int column_of(int v) const;
  std::vector<int> columns_of(const GroundSubset& s) const;

 private:
  std::vector<int> ground_;
  ExactMatrix a_;
  std::map<int, int> col_;
  int rank_ = 0;
};

int rank(const LinearMatroid& m, const GroundSubset& s);
bool is_independent(const LinearMatroid& m, const GroundSubset& s);
LinearMatroid delete_element(const LinearMatroid& m, int v);
LinearMatroid restrict_to(const LinearMatroid& m, const GroundSubset& keep);

struct TruncateOptions {
  enum class Mode { certified, symbolic, randomized };
  Mode mode = Mode::certified;
  bool symbolic_fallback = true;
  std::uint64_t seed = 0;
};

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Result has min(k, rank) rows and the same ground set.
LinearMatroid truncate(const LinearMatroid& m, int k, const TruncateOptions& opt = {});

struct RepFamilyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// mt must have rank exactly p + q.
std::vector<GroundSubset> representative_family(const LinearMatroid& mt, std::vector<GroundSubset> family,
                                                int p, int q);

std::optional<int> extend_independent(const LinearMatroid& m, const GroundSubset& i, const GroundSubset& c);

// Family members are subsets of {0..ground_size-1} encoded as bitmasks.
bool validate_axioms(int ground_size, const std::vector<std::uint32_t>& family);

GroundSubset set_union(const GroundSubset& a, const GroundSubset& b);
bool disjoint(const GroundSubset& a, const GroundSubset& b);

}  // namespace mrp

#endif
