#ifndef MRPATH_DP_HPP
#define MRPATH_DP_HPP

#include <vector>

#include "mrpath/framework.hpp"
#include "mrpath/semimatching.hpp"
#include "mrpath/treedec.hpp"

namespace mrp {

struct DPOptions {
  bool prune = true;
  // Prune every cell to k-representative (capped by the matroid rank) instead of (k-i).
  bool uniform_k = false;
  // Forget via rem() for any role of v instead of merging an internal v.
  bool paper_literal_forget = false;
  // Accept only ({s,t},{{s,t}},k,S), without counting s and t.
  bool paper_literal_root = false;
  TruncateOptions truncation;
};

struct DPKey {
  std::vector<int> x;
  SemiMatching m;
  int i = 0;
  auto operator<=>(const DPKey&) const = default;
  bool operator==(const DPKey&) const = default;
};

// Cell and entry indices into the child tables (second slot only for joins).
struct Provenance {
  int cell[2] = {-1, -1};
  int entry[2] = {-1, -1};
};

struct DPEntry {
  GroundSubset s;
  Provenance prov;
};

struct DPCell {
  DPKey key;
  std::vector<DPEntry> entries;  // sorted by s
};

// Cells sorted by key.
struct DPTable {
  std::vector<DPCell> cells;
  const DPCell* find(const DPKey& key) const;
  long entry_count() const;
};

struct DPStats {
  std::vector<int> cells_per_node;
  std::vector<long> entries_per_node;
  long max_entries = 0;
};

struct DPResult {
  bool yes = false;
  std::vector<int> path;
  GroundSubset independent_set;
  DPStats stats;
};

// One table per node of ntd, same indexing.
std::vector<DPTable> compute_tables(const Framework& f, const NiceTreeDecomposition& ntd, const DPOptions& opt = {});
DPResult solve_dp(const Framework& f, const NiceTreeDecomposition& ntd, const DPOptions& opt = {});

}  // namespace mrp

#endif
