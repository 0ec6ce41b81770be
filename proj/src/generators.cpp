#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mrpath/generators.hpp"
#include "mrpath/reductions.hpp"

namespace mrp {

namespace {

// Uniform double in [0,1) straight from the engine so results do not depend on the
// standard library's distribution code.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

// Neighbors sorted clockwise around each vertex for a straight-line drawing.
RotationSystem rotation_from_coords(const Graph& g, const std::map<int, std::pair<double, double>>& xy) {
  RotationSystem rot;
  for (int v : g.vertices()) {
    auto nb = g.neighbors(v);
    auto [vx, vy] = xy.at(v);
    std::sort(nb.begin(), nb.end(), [&](int a, int b) {
      auto ang = [&](int u) { return std::atan2(xy.at(u).second - vy, xy.at(u).first - vx); };
      return ang(a) > ang(b);
    });
    rot.order[v] = nb;
  }
  return rot;
}

}  // namespace

MatroidSpec parse_matroid_spec(const std::string& text) {
  MatroidSpec m;
  std::string body = text, field;
  if (auto at = text.find('@'); at != std::string::npos) {
    body = text.substr(0, at);
    field = text.substr(at + 1);
  }
  std::vector<std::string> parts;
  std::istringstream in(body);
  for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
  if (parts.empty()) throw std::invalid_argument("empty matroid spec");
  auto num = [&](std::size_t i, int dflt) {
    if (i >= parts.size()) return dflt;
    std::size_t used = 0;
    int v = std::stoi(parts[i], &used);
    if (used != parts[i].size() || v < 0) throw std::invalid_argument("bad number in matroid spec: " + parts[i]);
    return v;
  };
  const std::string& kind = parts[0];
  if (kind == "random") m.kind = MatroidSpec::Kind::random;
  else if (kind == "uniform") m.kind = MatroidSpec::Kind::uniform;
  else if (kind == "partition") m.kind = MatroidSpec::Kind::partition;
  else if (kind == "zero") m.kind = MatroidSpec::Kind::zero;
  else if (kind == "sparse") m.kind = MatroidSpec::Kind::sparse;
  else throw std::invalid_argument("unknown matroid kind '" + kind + "'");
  m.rows = num(1, m.kind == MatroidSpec::Kind::zero ? 1 : 3);
  m.count = num(2, 0);
  if (field == "rational") {
    m.field = FieldTag::rational_field();
  } else if (!field.empty()) {
    if (field.rfind("gfp", 0) != 0) throw std::invalid_argument("field must be gfp<p> or rational");
    long p = std::stol(field.substr(3));
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("non-prime modulus " + field.substr(3));
    m.field = FieldTag::prime_field(static_cast<std::uint32_t>(p));
  }
  return m;
}

std::string matroid_spec_str(const MatroidSpec& m) {
  static const char* names[] = {"random", "uniform", "partition", "zero", "sparse"};
  std::ostringstream os;
  os << names[static_cast<int>(m.kind)] << ":" << m.rows;
  if (m.kind == MatroidSpec::Kind::sparse) os << ":" << m.count;
  os << "@" << (m.field.kind == FieldTag::Kind::rational ? "rational" : "gfp" + std::to_string(m.field.p));
  return os.str();
}

Scalar random_scalar(FieldTag f, std::mt19937_64& rng) {
  if (f.kind == FieldTag::Kind::prime) return Scalar::from_int(f, static_cast<long long>(rng() % f.p));
  static const int dens[] = {1, 1, 1, 2, 3};
  long num = static_cast<long>(rng() % 7) - 3;
  long den = dens[rng() % 5];
  return Scalar::from_rational(mpq_class(num, den));
}

LinearMatroid random_matroid(const std::vector<int>& ground, int rows, FieldTag f, std::mt19937_64& rng) {
  ExactMatrix a(rows, static_cast<int>(ground.size()), f);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < static_cast<int>(ground.size()); ++j) a.set(i, j, random_scalar(f, rng));
  return LinearMatroid(ground, std::move(a));
}

LinearMatroid make_matroid(const std::vector<int>& ground, const MatroidSpec& spec, std::mt19937_64& rng) {
  const int n = static_cast<int>(ground.size());
  switch (spec.kind) {
    case MatroidSpec::Kind::random: return random_matroid(ground, spec.rows, spec.field, rng);
    case MatroidSpec::Kind::uniform: return uniform_matroid(ground, std::min(spec.rows, n));
    case MatroidSpec::Kind::partition: {
      std::map<int, int> color;
      for (int v : ground) color[v] = below(rng, std::max(spec.rows, 1));
      return partition_matroid(ground, color);
    }
    case MatroidSpec::Kind::zero: return LinearMatroid(ground, ExactMatrix(spec.rows, n, spec.field));
    case MatroidSpec::Kind::sparse: {
      ExactMatrix a(spec.rows, n, spec.field);
      std::vector<int> idx(n);
      for (int j = 0; j < n; ++j) idx[j] = j;
      for (int j = n - 1; j > 0; --j) std::swap(idx[j], idx[below(rng, j + 1)]);
      for (int c = 0; c < std::min(spec.count, n); ++c)
        for (int i = 0; i < spec.rows; ++i) a.set(i, idx[c], random_scalar(spec.field, rng));
      return LinearMatroid(ground, std::move(a));
    }
  }
  throw std::logic_error("unreachable");
}

InstanceBundle gen_random_planar(int n, double density, const MatroidSpec& spec, int k, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  std::mt19937_64 rng(seed);
  const int w = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
  Graph g(n);
  std::map<int, std::pair<double, double>> xy;
  for (int v = 0; v < n; ++v) xy[v] = {v % w, v / w};
  for (int v = 0; v < n; ++v) {
    const int x = v % w;
    int cand[3] = {x + 1 < w ? v + 1 : -1, v + w, x + 1 < w ? v + w + 1 : -1};
    for (int u : cand)
      if (u >= 0 && u < n && unit(rng) < density) g.add_edge(v, u);
  }
  InstanceBundle b;
  b.framework.graph = g;
  b.framework.s = below(rng, n);
  b.framework.t = (b.framework.s + 1 + below(rng, n - 1)) % n;
  b.framework.k = k;
  b.framework.matroid = make_matroid(g.vertices(), spec, rng);
  b.embedding = rotation_from_coords(g, xy);
  b.meta = {{"generator", "planar"}, {"n", std::to_string(n)}, {"seed", std::to_string(seed)},
            {"matroid", matroid_spec_str(spec)}};
  std::ostringstream d;
  d << density;
  b.meta["density"] = d.str();
  return b;
}

InstanceBundle gen_wall_instance(int h, const MatroidSpec& spec, int k, std::uint64_t seed, int max_extra) {
  auto built = build_elementary_wall(h);
  if (max_extra > 0) built = subdivide_wall(built.graph, built.wall, random_subdivision_scheme(h, max_extra, seed));
  Graph g = built.graph;
  const WallModel& w = built.wall;
  const int s = g.id_bound(), t = s + 1;
  g.add_vertex(s);
  g.add_vertex(t);
  g.add_edge(s, w.branch.at({1, 1}));
  g.add_edge(s, w.branch.at({2, 1}));
  g.add_edge(t, w.branch.at({2 * h, h}));
  g.add_edge(t, w.branch.at({2 * h - 1, h}));
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  InstanceBundle b;
  b.framework.graph = g;
  b.framework.s = s;
  b.framework.t = t;
  b.framework.k = k;
  b.framework.matroid = make_matroid(g.vertices(), spec, rng);
  b.wall = w;
  b.meta = {{"generator", "wall"}, {"height", std::to_string(h)}, {"seed", std::to_string(seed)},
            {"subdivide", std::to_string(max_extra)}, {"matroid", matroid_spec_str(spec)}};
  return b;
}

}  // namespace mrp
