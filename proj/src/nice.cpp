#include <algorithm>
#include <stdexcept>
#include <string>

#include "mrpath/treedec.hpp"

namespace mrp {

const char* kind_name(NiceKind k) {
  switch (k) {
    case NiceKind::leaf: return "leaf";
    case NiceKind::insert: return "insert";
    case NiceKind::forget: return "forget";
    case NiceKind::join: return "join";
  }
  return "?";
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& n : nodes) w = std::max(w, static_cast<int>(n.bag.size()) - 1);
  return w;
}

namespace {

std::vector<int> minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Builder {
 public:
  Builder(const TreeDecomposition& td, int s, int t) : td_(td), s_(s), t_(t) {
    kids_.resize(td.bags.size());
    for (std::size_t i = 0; i < td.parent.size(); ++i)
      if (td.parent[i] >= 0) kids_[td.parent[i]].push_back(static_cast<int>(i));
  }

  NiceTreeDecomposition run() {
    out_.s = s_;
    out_.t = t_;
    int root = static_cast<int>(std::find(td_.parent.begin(), td_.parent.end(), -1) - td_.parent.begin());
    int top = build(root);
    morph(top, terminals());
    return std::move(out_);
  }

 private:
  std::vector<int> terminals() const {
    return s_ < t_ ? std::vector<int>{s_, t_} : std::vector<int>{t_, s_};
  }

  std::vector<int> widened(int x) const {
    std::vector<int> b = td_.bags[x];
    b.push_back(s_);
    b.push_back(t_);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  }

  int add(NiceKind kind, int v, std::vector<int> children, std::vector<int> bag) {
    out_.nodes.push_back({kind, v, std::move(children), std::move(bag)});
    return static_cast<int>(out_.nodes.size()) - 1;
  }

  // Forget what leaves, then insert what arrives, both ascending.
  int morph(int node, const std::vector<int>& target) {
    std::vector<int> bag = out_.nodes[node].bag;
    for (int v : minus(bag, target)) {
      bag.erase(std::find(bag.begin(), bag.end(), v));
      node = add(NiceKind::forget, v, {node}, bag);
    }
    for (int v : minus(target, bag)) {
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      node = add(NiceKind::insert, v, {node}, bag);
    }
    return node;
  }

  int build(int x) {
    const auto bag = widened(x);
    std::vector<int> subs;
    for (int c : kids_[x]) subs.push_back(morph(build(c), bag));
    if (subs.empty()) return morph(add(NiceKind::leaf, -1, {}, terminals()), bag);
    int acc = subs[0];
    for (std::size_t i = 1; i < subs.size(); ++i) acc = add(NiceKind::join, -1, {acc, subs[i]}, bag);
    return acc;
  }

  const TreeDecomposition& td_;
  int s_, t_;
  std::vector<std::vector<int>> kids_;
  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const Graph& g, int s, int t) {
  if (!g.has_vertex(s) || !g.has_vertex(t) || s == t) throw std::invalid_argument("bad terminals");
  auto errs = validate_td(g, td);
  if (!errs.empty()) throw std::invalid_argument("invalid tree decomposition: " + errs[0]);
  return Builder(td, s, t).run();
}

std::vector<std::string> validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
  std::vector<std::string> out;
  const int n = static_cast<int>(ntd.nodes.size());
  if (n == 0) return {"empty decomposition"};
  const std::vector<int> st = ntd.s < ntd.t ? std::vector<int>{ntd.s, ntd.t} : std::vector<int>{ntd.t, ntd.s};
  TreeDecomposition plain;
  plain.parent.assign(n, -1);
  int parent_links = 0;
  for (int i = 0; i < n; ++i) {
    const auto& nd = ntd.nodes[i];
    plain.bags.push_back(nd.bag);
    for (int c : nd.children) {
      if (c < 0 || c >= i) {
        out.push_back("child not before parent at node " + std::to_string(i));
        return out;
      }
      if (plain.parent[c] != -1) out.push_back("node with two parents");
      plain.parent[c] = i;
      ++parent_links;
    }
    if (!std::binary_search(nd.bag.begin(), nd.bag.end(), ntd.s) ||
        !std::binary_search(nd.bag.begin(), nd.bag.end(), ntd.t))
      out.push_back("terminal missing from bag " + std::to_string(i));
    switch (nd.kind) {
      case NiceKind::leaf:
        if (!nd.children.empty() || nd.bag != st) out.push_back("bad leaf " + std::to_string(i));
        break;
      case NiceKind::join:
        if (nd.children.size() != 2 || ntd.nodes[nd.children[0]].bag != nd.bag ||
            ntd.nodes[nd.children[1]].bag != nd.bag)
          out.push_back("bad join " + std::to_string(i));
        break;
      case NiceKind::insert:
      case NiceKind::forget: {
        if (nd.children.size() != 1) {
          out.push_back("bad arity " + std::to_string(i));
          break;
        }
        const auto& cb = ntd.nodes[nd.children[0]].bag;
        const auto& big = nd.kind == NiceKind::insert ? nd.bag : cb;
        const auto& small = nd.kind == NiceKind::insert ? cb : nd.bag;
        auto d = minus(big, small);
        if (big.size() != small.size() + 1 || d.size() != 1 || d[0] != nd.v)
          out.push_back(std::string("bad ") + kind_name(nd.kind) + " " + std::to_string(i));
        break;
      }
    }
  }
  if (parent_links != n - 1) out.push_back("not a tree");
  if (ntd.nodes.back().bag != st) out.push_back("root bag is not {s,t}");
  auto td_errs = validate_td(g, plain);
  out.insert(out.end(), td_errs.begin(), td_errs.end());
  return out;
}

}  // namespace mrp
