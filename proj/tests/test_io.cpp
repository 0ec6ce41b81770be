#include "doctest.h"
#include "helpers.hpp"
#include "mrpath/generators.hpp"
#include "mrpath/io.hpp"
#include "mrpath/reductions.hpp"

using namespace mrp;

namespace {

const char* kSmall =
    "FRAMEWORK v1\n"
    "META name=triangle\n"
    "FIELD rational\n"
    "GRAPH 3 3\n"
    "0 1\n"
    "1 2\n"
    "0 2\n"
    "TERMINALS 0 2\n"
    "K 2\n"
    "MATROID 2 3\n"
    "1 0 3/6\n"
    "0 1 -1\n";

std::string parse_error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  auto at = s.find(from);
  REQUIRE(at != std::string::npos);
  return s.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("parse a small instance") {
  auto b = parse_instance(kSmall);
  CHECK(b.framework.graph.num_edges() == 3);
  CHECK(b.framework.s == 0);
  CHECK(b.framework.t == 2);
  CHECK(b.framework.k == 2);
  CHECK(b.framework.matroid.rank() == 2);
  CHECK(b.framework.matroid.matrix().at(0, 2).str() == "1/2");
  CHECK(b.meta.at("name") == "triangle");
  CHECK_FALSE(b.embedding.has_value());
}

TEST_CASE("canonical writer round-trips") {
  auto b = parse_instance(kSmall);
  auto text = write_instance(b);
  CHECK(text.find("1 0 1/2") != std::string::npos);
  auto again = parse_instance(text);
  CHECK(write_instance(again) == text);
  CHECK(again.framework.graph == b.framework.graph);
  CHECK(again.framework.matroid.matrix() == b.framework.matroid.matrix());
}

TEST_CASE("property: generated instances round-trip") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto spec = parse_matroid_spec(seed % 3 == 0 ? "random:3@rational" : seed % 3 == 1 ? "uniform:2@gfp7" : "partition:3");
    auto b = seed % 2 ? gen_random_planar(static_cast<int>(6 + seed), 0.7, spec, 2, seed)
                      : gen_wall_instance(3, spec, 2, seed, static_cast<int>(seed % 3));
    auto text = write_instance(b);
    auto again = parse_instance(text);
    CHECK(write_instance(again) == text);
    CHECK(validate_framework(again.framework).empty());
    if (b.wall) CHECK(again.wall == b.wall);
    if (b.embedding) CHECK(again.embedding == b.embedding);
  }
}

TEST_CASE("generators are deterministic") {
  auto spec = parse_matroid_spec("random:3@gfp101");
  CHECK(write_instance(gen_random_planar(15, 0.6, spec, 2, 7)) == write_instance(gen_random_planar(15, 0.6, spec, 2, 7)));
  CHECK(write_instance(gen_random_planar(15, 0.6, spec, 2, 7)) != write_instance(gen_random_planar(15, 0.6, spec, 2, 8)));
  CHECK(write_instance(gen_wall_instance(5, spec, 2, 3, 2)) == write_instance(gen_wall_instance(5, spec, 2, 3, 2)));
}

TEST_CASE("removed vertices") {
  std::string text =
      "FRAMEWORK v1\nFIELD gfp 5\nGRAPH 4 2\n0 1\n1 3\nREMOVED 2\nTERMINALS 0 3\nK 1\nMATROID 1 3\n1 2 3\n";
  auto b = parse_instance(text);
  CHECK_FALSE(b.framework.graph.has_vertex(2));
  CHECK(b.framework.matroid.ground() == std::vector<int>{0, 1, 3});
  CHECK(parse_instance(write_instance(b)).framework.graph == b.framework.graph);
}

TEST_CASE("parse errors carry positions") {
  CHECK(parse_error_of(replace(kSmall, "FIELD rational", "FIELD real")) == "line 3:7: unknown field 'real'");
  CHECK(parse_error_of(replace(kSmall, "FIELD rational", "FIELD gfp 9")) == "line 3:11: non-prime modulus 9");
  CHECK(parse_error_of(replace(kSmall, "META name", "MEAT name")) == "line 2:1: bad field tag 'MEAT'");
  CHECK(parse_error_of(replace(kSmall, "1 0 3/6", "1 0")).find("line 11:") == 0);
  CHECK(parse_error_of(replace(kSmall, "1 0 3/6", "1 0")).find("dimension mismatch") != std::string::npos);
  CHECK(parse_error_of(replace(kSmall, "1 2\n", "1 7\n")) == "line 6:3: dangling vertex id 7");
  CHECK(parse_error_of(replace(kSmall, "0 2\nTERM", "0 1\nTERM")).find("duplicate edge") != std::string::npos);
  CHECK(parse_error_of(replace(kSmall, "0 2\nTERM", "2 2\nTERM")).find("self-loop") != std::string::npos);
  CHECK(parse_error_of(replace(kSmall, "MATROID 2 3", "MATROID 2 4")).find("ground set size mismatch") != std::string::npos);
  CHECK(parse_error_of(replace(kSmall, "1 0 3/6", "1 0 3/0")).find("line 11:") == 0);
  CHECK(parse_error_of("") == "line 1:1: empty instance");
  CHECK(parse_error_of(replace(kSmall, "K 2\n", "")).find("missing K") != std::string::npos);
  std::string emb = std::string(kSmall) + "EMBEDDING\n0: 1 2\n1: 0 2\n2: 0\n";
  CHECK(parse_error_of(emb).find("embedding does not match the graph") != std::string::npos);
}

TEST_CASE("bad wall certificate") {
  auto b = gen_wall_instance(3, parse_matroid_spec("zero"), 1, 1);
  auto text = write_instance(b);
  auto at = text.find("BRANCH 1 1 ");
  REQUIRE(at != std::string::npos);
  auto eol = text.find('\n', at);
  text.replace(at, eol - at, "BRANCH 1 1 17");
  CHECK(parse_error_of(text).find("wall certificate invalid") != std::string::npos);
}

TEST_CASE("tree decomposition files") {
  TreeDecomposition td{{-1, 0, 0}, {{0, 1}, {1, 2}, {0, 3}}};
  auto text = write_td(td);
  CHECK(text == "TD 3\n-1 : 0 1\n0 : 1 2\n0 : 0 3\n");
  CHECK(parse_td(text) == td);
  CHECK_THROWS_AS(parse_td("TD 2\n-1 : 0\n"), ParseError);
  CHECK_THROWS_AS(parse_td("TX 1\n-1 : 0\n"), ParseError);
}

TEST_CASE("result records") {
  ResultRecord r{"YES", {0, 3, 2}, {0, 2}, {}, {"hello"}};
  CHECK(format_result(r) == "answer: YES\npath: 0 3 2\nindependent_set: 0 2\ndeletions:\n# hello\n");
}

TEST_CASE("matroid specs") {
  auto s = parse_matroid_spec("sparse:2:4@gfp3");
  CHECK(s.kind == MatroidSpec::Kind::sparse);
  CHECK(s.rows == 2);
  CHECK(s.count == 4);
  CHECK(s.field == FieldTag::prime_field(3));
  CHECK(matroid_spec_str(s) == "sparse:2:4@gfp3");
  CHECK(parse_matroid_spec("uniform:3").field == FieldTag::prime_field(101));
  CHECK(parse_matroid_spec("zero@rational").field == FieldTag::rational_field());
  CHECK_THROWS(parse_matroid_spec("banana"));
  CHECK_THROWS(parse_matroid_spec("random:2@gfp4"));
}

TEST_CASE("problem reductions") {
  auto u = uniform_matroid({0, 1, 2, 3, 4}, 3);
  CHECK(u.field() == FieldTag::prime_field(7));
  for (int sz = 0; sz <= 5; ++sz)
    testkit::for_each_subset(5, sz, [&](const std::vector<int>& s) { CHECK(is_independent(u, s) == (sz <= 3)); });
  std::map<int, int> color{{0, 0}, {1, 1}, {2, 1}, {3, 2}};
  auto pm = partition_matroid({0, 1, 2, 3}, color);
  CHECK(pm.rank() == 3);
  CHECK_FALSE(is_independent(pm, {1, 2}));
  CHECK(is_independent(pm, {0, 2, 3}));
  Graph c4(4);
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  auto tc = reduce_t_cycle(c4, {0, 2});
  CHECK(tc.size() == 4);
  for (const auto& inst : tc) {
    CHECK(inst.framework.graph.num_edges() == 3);
    CHECK(inst.framework.k == 2);
    CHECK(validate_framework(inst.framework).empty());
  }
  auto lp = reduce_longest_path(c4, 0, 1, 4);
  CHECK(lp.k == 4);
  CHECK(testkit::naive_decision(lp));
  lp.graph.remove_edge(2, 3);
  CHECK_FALSE(testkit::naive_decision(lp));
  // more vertices asked for than exist
  auto over = reduce_longest_path(c4, 0, 1, 6);
  CHECK(over.k == 6);
  CHECK(over.matroid.rank() == 4);
  CHECK_FALSE(testkit::naive_decision(over));
}
