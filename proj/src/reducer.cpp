#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mrpath/oracle.hpp"
#include "mrpath/reducer.hpp"

namespace mrp {

namespace {

long sat(long v) { return std::min(v, kConstantSaturation); }

int rank_of_vertices(const LinearMatroid& m, const std::vector<int>& vs) {
  GroundSubset s;
  for (int v : vs)
    if (m.contains(v)) s.push_back(v);
  std::sort(s.begin(), s.end());
  return rank(m, s);
}

ReduceOutcome irrelevant(int v, std::string why) {
  ReduceOutcome o;
  o.kind = ReduceOutcome::Kind::irrelevant;
  o.vertex = v;
  o.reason = std::move(why);
  return o;
}

ReduceOutcome incomplete(std::string why) {
  ReduceOutcome o;
  o.reason = std::move(why);
  return o;
}

std::vector<char> mask_of(const Graph& g, const std::vector<int>& vs) {
  std::vector<char> m(g.id_bound(), 0);
  for (int v : vs)
    if (v >= 0 && v < g.id_bound()) m[v] = 1;
  return m;
}

// Simple path from a to b through every vertex of targets, avoiding blocked vertices.
// Greedy: shortest hops in the given order, each hop keeping the remaining goals reachable.
std::optional<std::vector<int>> thread(const Graph& g, int a, int b, const std::vector<int>& targets,
                                       std::vector<char> blocked) {
  std::vector<int> goals = targets;
  goals.push_back(b);
  for (int v : goals) blocked[v] = 1;
  std::vector<int> path{a};
  blocked[a] = 1;
  int cur = a;
  for (std::size_t i = 0; i < goals.size(); ++i) {
    auto hop = shortest_path(g, cur, goals[i], &blocked);  // the goal itself may be entered
    if (!hop) return std::nullopt;
    for (std::size_t j = 1; j < hop->size(); ++j) {
      path.push_back((*hop)[j]);
      blocked[(*hop)[j]] = 1;
    }
    cur = goals[i];
    if (i + 1 == goals.size()) break;
    for (std::size_t j = i + 1; j < goals.size(); ++j) blocked[goals[j]] = 0;
    auto reach = reachable(g, cur, &blocked);
    for (std::size_t j = i + 1; j < goals.size(); ++j) {
      blocked[goals[j]] = 1;
      if (!std::binary_search(reach.begin(), reach.end(), goals[j])) return std::nullopt;
    }
  }
  return path;
}

struct BlockContext {
  Graph g;
  int s, t;
};

// The (s_B,t_B)-path within each block and their concatenation through G.
std::optional<std::vector<int>> stitch(const std::vector<BlockProblem>& blocks, const Graph& g, std::size_t chosen,
                                       const std::vector<int>& inner) {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> seg;
    if (i == chosen) {
      seg = inner;
    } else {
      auto bg = g.induced(blocks[i].vertices);
      auto p = shortest_path(bg, blocks[i].s, blocks[i].t);
      if (!p) return std::nullopt;
      seg = *p;
    }
    if (!out.empty()) {
      if (out.back() != seg.front()) return std::nullopt;
      out.insert(out.end(), seg.begin() + 1, seg.end());
    } else {
      out = seg;
    }
  }
  return out;
}

ReduceOutcome build_path(const Framework& f, const BlockContext& bc, const WallPacking& pack,
                         const std::vector<std::vector<int>>& compasses) {
  const Graph& g = bc.g;
  // One element per compass, greedily extending an independent set.
  GroundSubset s;
  std::vector<int> picks;
  for (const auto& k : compasses) {
    GroundSubset cand;
    for (int v : k)
      if (f.matroid.contains(v)) cand.push_back(v);
    auto e = extend_independent(f.matroid, s, cand);
    if (!e) return incomplete("compass rank below k after all");
    picks.push_back(*e);
    s.insert(std::upper_bound(s.begin(), s.end(), *e), *e);
  }
  auto w0_compass = compass_of(g, pack.w0);
  auto perim = layer_cycle(pack.w0, 1);
  std::vector<int> interior;
  std::set_difference(w0_compass.begin(), w0_compass.end(), perim.begin(), perim.end(), std::back_inserter(interior));
  std::sort(perim.begin(), perim.end());
  auto inner_mask = mask_of(g, interior);
  auto dp = vertex_disjoint_paths(g, {bc.s, bc.t}, perim, 2, &inner_mask);
  if (!dp.found) return incomplete("no disjoint paths from the terminals to the perimeter");
  std::vector<int> ps, pt;
  for (auto p : dp.paths) {
    // Cut at the first perimeter vertex.
    auto it = std::find_if(p.begin(), p.end(), [&](int v) { return std::binary_search(perim.begin(), perim.end(), v); });
    p.erase(it + 1, p.end());
    (p.front() == bc.s ? ps : pt) = p;
  }
  if (ps.empty() || pt.empty()) return incomplete("terminal paths malformed");
  const int s1 = ps.back(), t1 = pt.back();
  std::vector<int> order(picks.size());
  std::iota(order.begin(), order.end(), 0);
  // Inside the disk first, then anywhere in the block.
  auto outside_disk = mask_of(g, {});
  for (int v : g.vertices()) outside_disk[v] = !std::binary_search(w0_compass.begin(), w0_compass.end(), v);
  int tries = 0;
  for (int region = 0; region < 2; ++region) {
    std::sort(order.begin(), order.end());
    do {
      if (++tries > 2000) break;
      std::vector<char> blocked = region == 0 ? outside_disk : mask_of(g, {});
      for (int v : ps) blocked[v] = 1;
      for (int v : pt) blocked[v] = 1;
      blocked[s1] = 0;
      blocked[t1] = 0;
      std::vector<int> targets;
      for (int i : order) targets.push_back(picks[i]);
      auto mid = thread(g, s1, t1, targets, blocked);
      if (!mid) continue;
      std::vector<int> path = ps;
      path.insert(path.end(), mid->begin() + 1, mid->end());
      path.insert(path.end(), pt.rbegin() + 1, pt.rend());
      ReduceOutcome o;
      o.kind = ReduceOutcome::Kind::path_found;
      o.path = std::move(path);
      o.independent_set = s;
      return o;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return incomplete("could not thread the chosen vertices into one path");
}

}  // namespace

long rerouting_height(int k) { return 2L * k * (k + 2) + 2L * k + 1; }

ReductionConstants constants_for(int k) {
  if (k <= 1) throw std::invalid_argument("paper constants need k >= 2");
  ReductionConstants c;
  c.paper = true;
  c.b = rerouting_height(k);
  c.x = k + 1;
  c.z = sat((k + 1) * c.b);
  long q = packing_f(k - 1, static_cast<int>(std::min<long>(c.z, 1L << 30)), static_cast<int>(c.x), 3);
  c.q = sat(q);
  long side = ceil_sqrt(k);
  c.r = c.q >= kConstantSaturation / (side + 1) ? kConstantSaturation : sat(1 + side * (c.q + 1));
  c.g = c.r >= kConstantSaturation / 37 ? kConstantSaturation : 36 * (c.r + 1);
  return c;
}

ReductionConstants relaxed_constants(long b, long x, long z, long q, long r) {
  if (b < 1 || x < 1 || z < 1 || z % 2 == 0 || q < 3 || q % 2 == 0 || r < 3 || r % 2 == 0)
    throw std::invalid_argument("relaxed constants need b,x >= 1 and odd z >= 1, q >= 3, r >= 3");
  return {false, b, x, z, q, r, 36 * (r + 1)};
}

ReductionConstants default_relaxed(int k) {
  const long q = packing_f(std::max(k - 1, 1), 1, 1, 3);
  return relaxed_constants(1, 1, 1, q, 1 + ceil_sqrt(std::max(k, 1)) * (q + 1));
}

ReductionConstants parse_constants(const std::string& spec, int k) {
  if (spec == "paper") return constants_for(k);
  if (spec == "relaxed") return default_relaxed(k);
  const std::string pre = "relaxed:";
  if (spec.rfind(pre, 0) != 0) throw std::invalid_argument("constants must be 'paper' or 'relaxed:b,x,z,q,r'");
  std::istringstream in(spec.substr(pre.size()));
  std::vector<long> v;
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    long n = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad number in constants: " + tok);
    v.push_back(n);
  }
  if (v.size() != 5) throw std::invalid_argument("relaxed constants take five numbers b,x,z,q,r");
  return relaxed_constants(v[0], v[1], v[2], v[3], v[4]);
}

const char* outcome_name(ReduceOutcome::Kind k) {
  switch (k) {
    case ReduceOutcome::Kind::path_found: return "path_found";
    case ReduceOutcome::Kind::irrelevant: return "irrelevant";
    case ReduceOutcome::Kind::below_threshold: return "below_threshold";
    case ReduceOutcome::Kind::incomplete: return "incomplete";
  }
  return "?";
}

ReduceOutcome reduce_once(const Framework& f, const ReductionConstants& c, const std::optional<WallModel>& certificate) {
  const Graph& g = f.graph;
  if (f.s == f.t) throw std::invalid_argument("terminals must differ");
  if (c.r >= kConstantSaturation || c.q >= kConstantSaturation) return incomplete("constants too large to realize");
  const int r = static_cast<int>(c.r), q = static_cast<int>(c.q);
  auto split = biconnected_split(g, f.s, f.t);
  auto on_blocks = std::vector<char>(g.id_bound(), 0);
  for (const auto& b : split.blocks)
    for (int v : b.vertices) on_blocks[v] = 1;
  for (int v : g.vertices())
    if (v != f.s && v != f.t && !on_blocks[v]) return irrelevant(v, "not on any block between s and t");
  if (split.no_path) return incomplete("no (s,t)-path and nothing left to delete");

  std::string why;
  for (std::size_t bi = 0; bi < split.blocks.size(); ++bi) {
    const auto& blk = split.blocks[bi];
    if (static_cast<int>(blk.vertices.size()) < 2 * r * r - 2) continue;  // too small to hold an r-wall
    BlockContext bc{g.induced(blk.vertices), blk.s, blk.t};
    std::optional<WallModel> cert;
    if (certificate) cert = certificate;
    FindWallResult fw;
    try {
      fw = find_wall(bc.g, r, cert, {bc.s, bc.t});
    } catch (const std::invalid_argument& e) {
      return incomplete(e.what());
    }
    if (fw.kind != FindWallResult::Kind::wall) {
      if (fw.kind == FindWallResult::Kind::incomplete) why = fw.reason;
      continue;
    }
    const WallModel& w = fw.wall;
    WallPacking pack;
    try {
      pack = grid_packing(w, 1, std::max(f.k, 1), q);
    } catch (const PackingError& e) {
      return incomplete(std::string("packing: ") + e.what());
    }
    std::vector<std::vector<int>> compasses;
    int deficient = -1;
    for (std::size_t i = 0; i < pack.walls.size(); ++i) {
      compasses.push_back(compass_of(bc.g, pack.walls[i]));
      if (deficient < 0 && rank_of_vertices(f.matroid, compasses.back()) < f.k) deficient = static_cast<int>(i);
    }
    if (deficient < 0) {
      auto o = build_path(f, bc, pack, compasses);
      if (o.kind != ReduceOutcome::Kind::path_found) return o;
      auto full = stitch(split.blocks, g, bi, o.path);
      if (!full || !verify_witness(f, *full)) return incomplete("constructed path failed verification");
      o.path = *full;
      return o;
    }
    Framework bf{bc.g, restrict_to(f.matroid, blk.vertices), bc.s, bc.t, f.k};
    try {
      auto inner = equal_rank_packing(bf, pack.walls[deficient], std::max(f.k - 1, 0), static_cast<int>(c.z),
                                      static_cast<int>(c.x), 3);
      int v = central_vertex(inner.walls.front());
      if (v == f.s || v == f.t) return incomplete("central vertex is a terminal");
      return irrelevant(v, "central vertex of an equal-rank packing inside a deficient compass");
    } catch (const PackingError& e) {
      return incomplete(std::string("equal-rank packing: ") + e.what());
    }
  }
  // No wall anywhere: fall back to a decomposition of the whole graph.
  auto tw = treewidth_decompose(g, (9 * r - 1) / 2);
  if (tw.kind == TreewidthResult::Kind::decomposition && validate_td(g, tw.td, 9 * r).empty()) {
    ReduceOutcome o;
    o.kind = ReduceOutcome::Kind::below_threshold;
    o.td = std::move(tw.td);
    return o;
  }
  return incomplete(why.empty() ? "no wall found and treewidth is not small: " + tw.reason : why);
}

ReduceLoopResult reduce_loop(const Framework& f, const ReductionConstants& c, const std::optional<WallModel>& certificate,
                             const ReduceLoopOptions& opt) {
  ReduceLoopResult res;
  res.reduced = f;
  for (int it = 0; opt.max_iterations < 0 || it < opt.max_iterations; ++it) {
    res.last = reduce_once(res.reduced, c, certificate);
    if (res.last.kind != ReduceOutcome::Kind::irrelevant) break;
    const int v = res.last.vertex;
    if (v == f.s || v == f.t) throw std::logic_error("reducer tried to delete a terminal");
    std::optional<bool> before;
    if (opt.verify_deletions && res.reduced.graph.num_vertices() <= kOracleLimit)
      before = brute_force(res.reduced).yes;
    delete_vertex(res.reduced, v);
    res.deletions.push_back(v);
    if (before) {
      ++res.replay_checks;
      if (brute_force(res.reduced).yes != *before) ++res.replay_mismatches;
    }
  }
  return res;
}

}  // namespace mrp
