#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mrpath/io.hpp"

namespace mrp {

ParseError::ParseError(int line_, int col_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

namespace {

struct Token {
  std::string text;
  int col;
};

struct Line {
  int no;
  std::vector<Token> toks;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int no = 0;
  while (std::getline(in, raw)) {
    ++no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line l{no, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i >= raw.size()) break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      l.toks.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!l.toks.empty()) out.push_back(std::move(l));
  }
  return out;
}

const std::set<std::string> kSections = {"FRAMEWORK", "META", "FIELD", "GRAPH", "REMOVED", "TERMINALS",
                                         "K",         "MATROID", "EMBEDDING", "WALL"};

class Parser {
 public:
  explicit Parser(const std::string& text) : lines_(tokenize(text)) {}

  InstanceBundle run() {
    if (lines_.empty()) throw ParseError(1, 1, "empty instance");
    const Line& head = lines_[0];
    if (head.toks[0].text != "FRAMEWORK" || head.toks.size() != 2 || head.toks[1].text != "v1")
      throw ParseError(head.no, head.toks[0].col, "expected 'FRAMEWORK v1'");
    pos_ = 1;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_++];
      const Token& tag = l.toks[0];
      if (tag.text == "META") meta(l);
      else if (tag.text == "FIELD") field(l);
      else if (tag.text == "GRAPH") graph(l);
      else if (tag.text == "REMOVED") removed(l);
      else if (tag.text == "TERMINALS") terminals(l);
      else if (tag.text == "K") k(l);
      else if (tag.text == "MATROID") matroid(l);
      else if (tag.text == "EMBEDDING") embedding(l);
      else if (tag.text == "WALL") wall(l);
      else throw ParseError(l.no, tag.col, "bad field tag '" + tag.text + "'");
    }
    return finish();
  }

 private:
  [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& msg) const {
    int col = tok < l.toks.size() ? l.toks[tok].col : (l.toks.empty() ? 1 : l.toks.back().col);
    throw ParseError(l.no, col, msg);
  }

  long number(const Line& l, std::size_t tok, std::string text = {}) const {
    if (tok >= l.toks.size()) fail(l, tok, "missing number");
    if (text.empty()) text = l.toks[tok].text;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(text, &used);
    } catch (const std::exception&) {
      fail(l, tok, "expected a number, got '" + text + "'");
    }
    if (used != text.size()) fail(l, tok, "expected a number, got '" + text + "'");
    return v;
  }

  void arity(const Line& l, std::size_t n) const {
    if (l.toks.size() != n) fail(l, std::min(l.toks.size(), n), "expected " + std::to_string(n - 1) + " arguments");
  }

  int vertex(const Line& l, std::size_t tok, std::string text = {}) const {
    if (!graph_line_) fail(l, tok, "vertex before GRAPH");
    long v = number(l, tok, std::move(text));
    if (v < 0 || v >= n_ || removed_.count(static_cast<int>(v))) fail(l, tok, "dangling vertex id " + std::to_string(v));
    return static_cast<int>(v);
  }

  bool section_start(std::size_t i) const { return kSections.count(lines_[i].toks[0].text) > 0; }

  void meta(const Line& l) {
    for (std::size_t i = 1; i < l.toks.size(); ++i) {
      auto eq = l.toks[i].text.find('=');
      if (eq == std::string::npos) fail(l, i, "META entries are key=value");
      b_.meta[l.toks[i].text.substr(0, eq)] = l.toks[i].text.substr(eq + 1);
    }
  }

  void field(const Line& l) {
    if (l.toks.size() < 2) fail(l, 1, "missing field");
    if (l.toks[1].text == "rational") {
      arity(l, 2);
      field_ = FieldTag::rational_field();
    } else if (l.toks[1].text == "gfp") {
      arity(l, 3);
      long p = number(l, 2);
      if (p < 2 || p > 2147483647L || !is_prime(static_cast<std::uint64_t>(p))) fail(l, 2, "non-prime modulus " + l.toks[2].text);
      field_ = FieldTag::prime_field(static_cast<std::uint32_t>(p));
    } else {
      fail(l, 1, "unknown field '" + l.toks[1].text + "'");
    }
    field_line_ = l.no;
  }

  void graph(const Line& l) {
    arity(l, 3);
    n_ = number(l, 1);
    long m = number(l, 2);
    if (n_ < 0 || m < 0) fail(l, 1, "negative size");
    graph_line_ = l.no;
    for (long e = 0; e < m; ++e) {
      if (pos_ >= lines_.size() || section_start(pos_)) fail(l, 2, "expected " + std::to_string(m) + " edge lines");
      const Line& el = lines_[pos_++];
      arity(el, 2);
      long u = number(el, 0), v = number(el, 1);
      if (u < 0 || u >= n_) fail(el, 0, "dangling vertex id " + std::to_string(u));
      if (v < 0 || v >= n_) fail(el, 1, "dangling vertex id " + std::to_string(v));
      if (u == v) fail(el, 1, "self-loop");
      edges_.push_back({static_cast<int>(u), static_cast<int>(v), el.no, el.toks[0].col});
    }
  }

  void removed(const Line& l) {
    if (!graph_line_) fail(l, 0, "REMOVED before GRAPH");
    for (std::size_t i = 1; i < l.toks.size(); ++i) {
      long v = number(l, i);
      if (v < 0 || v >= n_) fail(l, i, "dangling vertex id " + std::to_string(v));
      removed_.insert(static_cast<int>(v));
    }
  }

  void terminals(const Line& l) {
    arity(l, 3);
    b_.framework.s = vertex(l, 1);
    b_.framework.t = vertex(l, 2);
    if (b_.framework.s == b_.framework.t) fail(l, 2, "terminals coincide");
    have_terminals_ = true;
  }

  void k(const Line& l) {
    arity(l, 2);
    long k = number(l, 1);
    if (k < 0) fail(l, 1, "negative k");
    b_.framework.k = static_cast<int>(k);
    have_k_ = true;
  }

  void matroid(const Line& l) {
    arity(l, 3);
    if (!field_line_) fail(l, 0, "MATROID before FIELD");
    if (!graph_line_) fail(l, 0, "MATROID before GRAPH");
    long r = number(l, 1), n = number(l, 2);
    if (r < 0 || n < 0) fail(l, 1, "negative size");
    if (n != n_ - static_cast<long>(removed_.size())) fail(l, 2, "ground set size mismatch");
    ExactMatrix a(static_cast<int>(r), static_cast<int>(n), field_);
    for (long i = 0; i < r; ++i) {
      if (pos_ >= lines_.size() || section_start(pos_)) fail(l, 1, "expected " + std::to_string(r) + " matrix rows");
      const Line& row = lines_[pos_++];
      if (static_cast<long>(row.toks.size()) != n)
        fail(row, std::min<std::size_t>(row.toks.size(), n), "dimension mismatch: expected " + std::to_string(n) + " entries");
      for (long j = 0; j < n; ++j) {
        try {
          a.set(static_cast<int>(i), static_cast<int>(j), Scalar::parse(field_, row.toks[j].text));
        } catch (const std::exception& e) {
          fail(row, j, e.what());
        }
      }
    }
    matrix_ = std::move(a);
    matroid_line_ = l.no;
  }

  void embedding(const Line& l) {
    arity(l, 1);
    RotationSystem rot;
    while (pos_ < lines_.size() && !section_start(pos_)) {
      const Line& el = lines_[pos_++];
      const std::string& head = el.toks[0].text;
      if (head.empty() || head.back() != ':') fail(el, 0, "embedding lines look like 'v: a b c'");
      int v = vertex(el, 0, head.substr(0, head.size() - 1));
      auto& order = rot.order[v];
      for (std::size_t i = 1; i < el.toks.size(); ++i) order.push_back(vertex(el, i));
    }
    b_.embedding = std::move(rot);
    embedding_line_ = l.no;
  }

  void wall(const Line& l) {
    arity(l, 2);
    WallModel w;
    w.height = static_cast<int>(number(l, 1));
    while (pos_ < lines_.size() && !section_start(pos_)) {
      const Line& wl = lines_[pos_++];
      const std::string& kind = wl.toks[0].text;
      if (kind == "BRANCH") {
        arity(wl, 4);
        Pos p{static_cast<int>(number(wl, 1)), static_cast<int>(number(wl, 2))};
        if (w.branch.count(p)) fail(wl, 1, "position listed twice");
        w.branch[p] = vertex(wl, 3);
      } else if (kind == "PATH") {
        if (wl.toks.size() < 6) fail(wl, wl.toks.size(), "PATH x1 y1 x2 y2 v...");
        Pos a{static_cast<int>(number(wl, 1)), static_cast<int>(number(wl, 2))};
        Pos b{static_cast<int>(number(wl, 3)), static_cast<int>(number(wl, 4))};
        if (!(a < b)) fail(wl, 1, "PATH endpoints must be in increasing order");
        auto& path = w.subdiv[{a, b}];
        for (std::size_t i = 5; i < wl.toks.size(); ++i) path.push_back(vertex(wl, i));
      } else {
        fail(wl, 0, "expected BRANCH or PATH inside WALL");
      }
    }
    b_.wall = std::move(w);
    wall_line_ = l.no;
  }

  InstanceBundle finish() {
    const int last = lines_.back().no;
    if (!field_line_) throw ParseError(last, 1, "missing FIELD");
    if (!graph_line_) throw ParseError(last, 1, "missing GRAPH");
    if (!have_terminals_) throw ParseError(last, 1, "missing TERMINALS");
    if (!have_k_) throw ParseError(last, 1, "missing K");
    if (!matroid_line_) throw ParseError(last, 1, "missing MATROID");
    Graph g(static_cast<int>(n_));
    for (int v : removed_) g.remove_vertex(v);
    for (const auto& e : edges_) {
      if (removed_.count(e.u) || removed_.count(e.v))
        throw ParseError(e.line, e.col, "dangling vertex id " + std::to_string(removed_.count(e.u) ? e.u : e.v));
      if (!g.add_edge(e.u, e.v)) throw ParseError(e.line, e.col, "duplicate edge");
    }
    if (removed_.count(b_.framework.s) || removed_.count(b_.framework.t))
      throw ParseError(last, 1, "terminal was removed");
    b_.framework.matroid = LinearMatroid(g.vertices(), std::move(matrix_));
    b_.framework.graph = std::move(g);
    if (b_.embedding) {
      const auto& rot = *b_.embedding;
      for (int v : b_.framework.graph.vertices()) {
        auto it = rot.order.find(v);
        std::vector<int> a = it == rot.order.end() ? std::vector<int>{} : it->second;
        std::vector<int> nb = b_.framework.graph.neighbors(v);
        std::sort(a.begin(), a.end());
        std::sort(nb.begin(), nb.end());
        if (a != nb) throw ParseError(embedding_line_, 1, "embedding does not match the graph at vertex " + std::to_string(v));
      }
      if (!euler_check(b_.framework.graph, rot)) throw ParseError(embedding_line_, 1, "embedding is not planar");
    }
    if (b_.wall) {
      auto errs = validate_wall(b_.framework.graph, *b_.wall);
      if (!errs.empty()) throw ParseError(wall_line_, 1, "wall certificate invalid: " + errs[0]);
    }
    return std::move(b_);
  }

  struct PendingEdge {
    int u, v, line, col;
  };

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  InstanceBundle b_;
  FieldTag field_;
  ExactMatrix matrix_;
  long n_ = 0;
  std::set<int> removed_;
  std::vector<PendingEdge> edges_;
  int field_line_ = 0, graph_line_ = 0, matroid_line_ = 0, embedding_line_ = 0, wall_line_ = 0;
  bool have_terminals_ = false, have_k_ = false;
};

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

}  // namespace

InstanceBundle parse_instance(const std::string& text) { return Parser(text).run(); }

InstanceBundle read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string write_instance(const InstanceBundle& b) {
  const Framework& f = b.framework;
  std::ostringstream os;
  os << "FRAMEWORK v1\n";
  for (const auto& [k, v] : b.meta) {
    std::string val = v;
    std::replace(val.begin(), val.end(), ' ', '_');
    os << "META " << k << "=" << val << "\n";
  }
  os << "FIELD " << f.matroid.field().str() << "\n";
  auto edges = f.graph.edges();
  os << "GRAPH " << f.graph.id_bound() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) os << u << " " << v << "\n";
  std::vector<int> gone;
  for (int v = 0; v < f.graph.id_bound(); ++v)
    if (!f.graph.has_vertex(v)) gone.push_back(v);
  if (!gone.empty()) os << "REMOVED " << join(gone) << "\n";
  os << "TERMINALS " << f.s << " " << f.t << "\n";
  os << "K " << f.k << "\n";
  auto verts = f.graph.vertices();
  auto cols = f.matroid.columns_of(verts);
  const ExactMatrix& a = f.matroid.matrix();
  os << "MATROID " << a.rows() << " " << verts.size() << "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) os << (j ? " " : "") << a.at(i, cols[j]).str();
    os << "\n";
  }
  if (b.embedding) {
    os << "EMBEDDING\n";
    for (const auto& [v, order] : b.embedding->order) os << v << ": " << join(order) << "\n";
  }
  if (b.wall) {
    os << "WALL " << b.wall->height << "\n";
    for (const auto& [p, v] : b.wall->branch) os << "BRANCH " << p.first << " " << p.second << " " << v << "\n";
    for (const auto& [e, path] : b.wall->subdiv)
      os << "PATH " << e.first.first << " " << e.first.second << " " << e.second.first << " " << e.second.second << " "
         << join(path) << "\n";
  }
  return os.str();
}

TreeDecomposition parse_td(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].toks[0].text != "TD" || lines[0].toks.size() != 2)
    throw ParseError(lines.empty() ? 1 : lines[0].no, 1, "expected 'TD <bags>'");
  auto num = [](const Line& l, std::size_t i) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(l.toks[i].text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != l.toks[i].text.size()) throw ParseError(l.no, l.toks[i].col, "expected a number");
    return static_cast<int>(v);
  };
  const int n = num(lines[0], 1);
  if (n < 0 || static_cast<int>(lines.size()) != n + 1)
    throw ParseError(lines[0].no, lines[0].toks[1].col, "bag count does not match the number of lines");
  TreeDecomposition td;
  for (int i = 1; i <= n; ++i) {
    const Line& l = lines[i];
    if (l.toks.size() < 2 || l.toks[1].text != ":") throw ParseError(l.no, 1, "bag lines look like '<parent> : <vertices>'");
    td.parent.push_back(num(l, 0));
    std::vector<int> bag;
    for (std::size_t j = 2; j < l.toks.size(); ++j) bag.push_back(num(l, j));
    td.bags.push_back(std::move(bag));
  }
  return td;
}

std::string write_td(const TreeDecomposition& td) {
  std::ostringstream os;
  os << "TD " << td.bags.size() << "\n";
  for (std::size_t i = 0; i < td.bags.size(); ++i) {
    os << td.parent[i] << " :";
    for (int v : td.bags[i]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::string format_result(const ResultRecord& r) {
  std::ostringstream os;
  auto field = [&](const char* name, const std::vector<int>& v) {
    os << name << ":" << (v.empty() ? "" : " ") << join(v) << "\n";
  };
  os << "answer: " << r.answer << "\n";
  field("path", r.path);
  field("independent_set", r.independent_set);
  field("deletions", r.deletions);
  for (const auto& l : r.log) os << "# " << l << "\n";
  return os.str();
}

}  // namespace mrp
