#include <algorithm>
#include <sstream>

#include "mrpath/pipeline.hpp"

namespace mrp {

namespace {

SolveResult no(std::vector<std::string> log, std::string why) {
  SolveResult r;
  r.verdict = SolveResult::Verdict::no;
  r.log = std::move(log);
  r.log.push_back(std::move(why));
  return r;
}

std::string width_note(const char* what, const TreeDecomposition& td) {
  std::ostringstream os;
  os << what << " width " << td.width() << " with " << td.bags.size() << " bags";
  return os.str();
}

}  // namespace

const char* verdict_name(SolveResult::Verdict v) {
  switch (v) {
    case SolveResult::Verdict::yes: return "YES";
    case SolveResult::Verdict::no: return "NO";
    case SolveResult::Verdict::incomplete: return "INCOMPLETE";
  }
  return "?";
}

SolveResult solve_rank_one(const Framework& f) {
  auto split = biconnected_split(f.graph, f.s, f.t);
  if (split.no_path) return no({}, "s and t are disconnected");
  for (const auto& blk : split.blocks)
    for (int v : blk.vertices) {
      if (rank(f.matroid, {v}) == 0) continue;
      // Route s_B -> v -> t_B inside the block, then walk the other blocks.
      Graph bg = f.graph.induced(blk.vertices);
      std::vector<int> seg;
      if (v == blk.s || v == blk.t) {
        seg = *shortest_path(bg, blk.s, blk.t);
      } else {
        auto dp = vertex_disjoint_paths(bg, {v}, {blk.s, blk.t}, 2);
        if (!dp.found) continue;
        std::vector<int> to_s, to_t;
        for (auto& p : dp.paths) (p.back() == blk.s ? to_s : to_t) = p;
        seg.assign(to_s.rbegin(), to_s.rend());
        seg.insert(seg.end(), to_t.begin() + 1, to_t.end());
      }
      std::vector<int> path;
      for (const auto& other : split.blocks) {
        std::vector<int> piece = &other == &blk ? seg : *shortest_path(f.graph.induced(other.vertices), other.s, other.t);
        path.insert(path.end(), path.empty() ? piece.begin() : piece.begin() + 1, piece.end());
      }
      if (!verify_witness(f, path)) continue;
      SolveResult r;
      r.verdict = SolveResult::Verdict::yes;
      r.path = path;
      r.independent_set = {v};
      r.log.push_back("k=1 answered by block reachability");
      return r;
    }
  return no({}, "no vertex of nonzero rank lies on an (s,t)-path");
}

SolveResult solve_with_dp(const Framework& f, const TreeDecomposition& td, const DPOptions& opt) {
  SolveResult r;
  auto ntd = make_nice(td, f.graph, f.s, f.t);
  r.log.push_back(width_note("dp on decomposition of", td));
  auto d = solve_dp(f, ntd, opt);
  std::ostringstream os;
  os << "dp nodes " << ntd.nodes.size() << ", largest table " << d.stats.max_entries << " entries";
  r.log.push_back(os.str());
  if (!d.yes) {
    r.verdict = SolveResult::Verdict::no;
    return r;
  }
  r.verdict = SolveResult::Verdict::yes;
  r.path = d.path;
  r.independent_set = d.independent_set;
  return r;
}

SolveResult solve_full(const InstanceBundle& b, const SolveOptions& opt) {
  Framework f = b.framework;
  auto errs = validate_framework(f);
  if (!errs.empty()) throw std::invalid_argument("invalid framework: " + errs[0]);
  std::vector<std::string> log;
  {
    std::ostringstream os;
    const auto& c = opt.constants;
    os << "constants " << (c.paper ? "paper" : "relaxed") << " b=" << c.b << " x=" << c.x << " z=" << c.z
       << " q=" << c.q << " r=" << c.r << " g=" << c.g << "; dp width limit " << opt.dp_width_limit;
    log.push_back(os.str());
  }
  auto finish = [&](SolveResult r, const std::vector<int>& dels) {
    r.log.insert(r.log.begin(), log.begin(), log.end());
    r.deletions = dels;
    if (r.verdict == SolveResult::Verdict::yes && !r.path.empty() && !verify_witness(b.framework, r.path))
      throw std::logic_error("witness failed verification against the input");
    return r;
  };
  if (f.k > f.matroid.rank()) return finish(no({}, "k exceeds the matroid rank"), {});
  if (f.k == 0) {
    auto p = shortest_path(f.graph, f.s, f.t);
    if (!p) return finish(no({}, "s and t are disconnected"), {});
    SolveResult r;
    r.verdict = SolveResult::Verdict::yes;
    r.path = *p;
    r.log.push_back("k=0 answered by reachability");
    return finish(r, {});
  }
  if (f.k == 1) return finish(solve_rank_one(f), {});

  std::vector<int> dels;
  const long threshold = std::min<long>(opt.constants.g, opt.dp_width_limit);
  for (int it = 0; opt.max_iterations < 0 || it < opt.max_iterations; ++it) {
    auto tw = treewidth_decompose(f.graph, static_cast<int>(threshold));
    if (tw.kind == TreewidthResult::Kind::decomposition && tw.td.width() <= opt.dp_width_limit)
      return finish(solve_with_dp(f, tw.td, opt.dp), dels);
    auto o = reduce_once(f, opt.constants, b.wall);
    switch (o.kind) {
      case ReduceOutcome::Kind::irrelevant: {
        log.push_back("delete " + std::to_string(o.vertex) + ": " + o.reason);
        delete_vertex(f, o.vertex);
        dels.push_back(o.vertex);
        continue;
      }
      case ReduceOutcome::Kind::path_found: {
        SolveResult r;
        r.verdict = SolveResult::Verdict::yes;
        r.path = o.path;
        r.independent_set = o.independent_set;
        r.log.push_back("path routed through a wall packing");
        return finish(r, dels);
      }
      case ReduceOutcome::Kind::below_threshold: {
        if (o.td.width() <= opt.dp_width_limit) return finish(solve_with_dp(f, o.td, opt.dp), dels);
        SolveResult r;
        r.reason = width_note("no wall and decomposition too wide for the dp:", o.td);
        r.log.push_back(r.reason);
        return finish(r, dels);
      }
      case ReduceOutcome::Kind::incomplete: {
        SolveResult r;
        r.reason = "reducer: " + o.reason;
        r.log.push_back(r.reason);
        return finish(r, dels);
      }
    }
  }
  SolveResult r;
  r.reason = "iteration limit reached";
  r.log.push_back(r.reason);
  return finish(r, dels);
}

}  // namespace mrp
