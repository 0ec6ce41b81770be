#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mrpath/semimatching.hpp"

namespace mrp {

namespace {

bool acyclic_deg2(const std::vector<std::pair<int, int>>& pairs) {
  std::map<int, int> deg, uf;
  auto find = [&](int x) {
    if (!uf.count(x)) uf[x] = x;
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto [a, b] : pairs) {
    if (++deg[a] > 2 || ++deg[b] > 2) return false;
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    uf[ra] = rb;
  }
  return true;
}

}  // namespace

SemiMatching sm_make(std::vector<std::pair<int, int>> elems) {
  for (auto& [a, b] : elems)
    if (a > b) std::swap(a, b);
  std::sort(elems.begin(), elems.end());
  return {std::move(elems)};
}

bool sm_valid(const SemiMatching& m) {
  const auto& e = m.elems;
  if (!std::is_sorted(e.begin(), e.end()) || std::adjacent_find(e.begin(), e.end()) != e.end()) return false;
  std::vector<int> singles;
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : e) {
    if (a > b) return false;
    if (a == b) singles.push_back(a);
    else pairs.push_back({a, b});
  }
  if (!acyclic_deg2(pairs)) return false;
  for (auto [a, b] : pairs)
    if (std::binary_search(singles.begin(), singles.end(), a) || std::binary_search(singles.begin(), singles.end(), b))
      return false;
  return true;
}

std::optional<SemiMatching> sm_from_pairs(std::vector<std::pair<int, int>> pairs, const std::vector<int>& base) {
  for (auto& [a, b] : pairs) {
    if (a == b) return std::nullopt;
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return std::nullopt;
  if (!acyclic_deg2(pairs)) return std::nullopt;
  std::vector<int> covered;
  for (auto [a, b] : pairs) {
    covered.push_back(a);
    covered.push_back(b);
  }
  std::sort(covered.begin(), covered.end());
  auto elems = pairs;
  for (int v : base)
    if (!std::binary_search(covered.begin(), covered.end(), v)) elems.push_back({v, v});
  return sm_make(std::move(elems));
}

std::vector<int> sm_cover(const SemiMatching& m) {
  std::vector<int> out;
  for (auto [a, b] : m.elems) {
    out.push_back(a);
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int sm_degree(const SemiMatching& m, int v) {
  int d = 0;
  for (auto [a, b] : m.elems)
    if (a != b && (a == v || b == v)) ++d;
  return d;
}

std::vector<std::pair<int, int>> sm_pairs(const SemiMatching& m) {
  std::vector<std::pair<int, int>> out;
  for (auto e : m.elems)
    if (e.first != e.second) out.push_back(e);
  return out;
}

std::string sm_str(const SemiMatching& m) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < m.elems.size(); ++i) {
    auto [a, b] = m.elems[i];
    if (i) os << ',';
    if (a == b) os << '{' << a << '}';
    else os << '{' << a << ',' << b << '}';
  }
  os << '}';
  return os.str();
}

SemiMatching sm_rem(const SemiMatching& m, int v) {
  std::vector<std::pair<int, int>> kept;
  std::vector<int> partners;
  for (auto [a, b] : m.elems) {
    if (a == v || b == v) {
      if (a != b) partners.push_back(a == v ? b : a);
    } else {
      kept.push_back({a, b});
    }
  }
  SemiMatching rest{kept};
  auto cov = sm_cover(rest);
  for (int u : partners)
    if (!std::binary_search(cov.begin(), cov.end(), u)) kept.push_back({u, u});
  return sm_make(std::move(kept));
}

std::vector<SemiMatching> sm_add(const SemiMatching& m, int v) {
  std::vector<SemiMatching> out;
  auto base = sm_cover(m);
  if (std::binary_search(base.begin(), base.end(), v)) return out;
  auto pairs = sm_pairs(m);
  auto with_v = base;
  with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), v), v);
  const int n = static_cast<int>(base.size());
  // v attaches to none, one or two vertices of U(m); index n stands for "nobody".
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n + 1; ++b) {
      if (b == n + 1 && a != n) continue;
      if (a == n && b != n + 1) continue;
      auto p = pairs;
      if (a < n) p.push_back({base[a], v});
      if (b < n) p.push_back({base[b], v});
      auto cand = sm_from_pairs(p, with_v);
      if (cand && sm_rem(*cand, v) == m) out.push_back(*cand);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<SemiMatching> sm_merge(const SemiMatching& m, int v) {
  std::vector<int> nb;
  std::vector<std::pair<int, int>> pairs;
  for (auto [a, b] : m.elems) {
    if (a == b) continue;
    if (a == v || b == v) nb.push_back(a == v ? b : a);
    else pairs.push_back({a, b});
  }
  if (nb.size() != 2) return std::nullopt;
  pairs.push_back({nb[0], nb[1]});
  auto base = sm_cover(m);
  base.erase(std::find(base.begin(), base.end(), v));
  return sm_from_pairs(pairs, base);
}

std::vector<SemiMatching> sm_forget_predecessors(const SemiMatching& m, int v) {
  std::vector<SemiMatching> out;
  auto base = sm_cover(m);
  if (std::binary_search(base.begin(), base.end(), v)) return out;
  auto pairs = sm_pairs(m);
  base.insert(std::lower_bound(base.begin(), base.end(), v), v);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto p = pairs;
    auto [a, b] = p[i];
    p.erase(p.begin() + static_cast<long>(i));
    p.push_back({a, v});
    p.push_back({v, b});
    auto cand = sm_from_pairs(p, base);
    if (cand && sm_merge(*cand, v) == m) out.push_back(*cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<SemiMatching, SemiMatching>> sm_xi(const SemiMatching& m) {
  const std::size_t n = m.elems.size();
  std::vector<std::pair<SemiMatching, SemiMatching>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    SemiMatching a, b;
    for (std::size_t i = 0; i < n; ++i) (mask >> i & 1 ? a : b).elems.push_back(m.elems[i]);
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

std::optional<SemiMatching> sig_of_forest(const Graph& g, const std::vector<int>& x, const Graph& f) {
  for (auto [u, v] : f.edges())
    if (!g.has_edge(u, v)) return std::nullopt;
  auto in_x = [&](int v) { return std::binary_search(x.begin(), x.end(), v); };
  std::vector<std::pair<int, int>> elems;
  for (const auto& comp : connected_components(f)) {
    int edges = 0;
    for (int v : comp) {
      if (f.degree(v) > 2) return std::nullopt;
      edges += f.degree(v);
    }
    if (edges / 2 != static_cast<int>(comp.size()) - 1) return std::nullopt;  // has a cycle
    bool touches = std::any_of(comp.begin(), comp.end(), in_x);
    if (!touches) continue;
    if (comp.size() == 1) {
      elems.push_back({comp[0], comp[0]});
      continue;
    }
    int start = -1;
    for (int v : comp)
      if (f.degree(v) == 1) {
        start = v;
        break;
      }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int w : f.neighbors(cur))
        if (w != prev) next = w;
      if (next < 0) break;
      order.push_back(next);
      prev = cur;
      cur = next;
    }
    if (!in_x(order.front()) || !in_x(order.back())) return std::nullopt;
    int last = -1;
    for (int v : order)
      if (in_x(v)) {
        if (last >= 0) elems.push_back({last, v});
        last = v;
      }
  }
  auto m = sm_make(std::move(elems));
  if (!sm_valid(m)) return std::nullopt;
  return m;
}

}  // namespace mrp
