#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zonocube/checks.hpp"
#include "zonocube/io.hpp"

using namespace zonocube;

namespace {

Cubillage fix(int n, int d, std::initializer_list<std::initializer_list<int>> sets) {
  InversionSet u(n, d);
  for (auto s : sets) u.insert(ColorSet::of(s));
  return Cubillage::validated(std::move(u));
}

}  // namespace

TEST_CASE("conjecture-1 checker") {
  auto rep63 = check_conjecture1(6, 3);
  CHECK(rep63.verdict == CheckReport::Verdict::Pass);
  CHECK(rep63.witnesses["barrel_edges"] == 0);

  auto rep52 = check_conjecture1(5, 2);  // n = d+3 and d = 2
  CHECK(rep52.verdict == CheckReport::Verdict::Pass);
  CHECK(rep52.witnesses["nodes"] == 10);

  auto j = rep52.to_json();
  CHECK(j["check"] == "conjecture1");
  CHECK(j["verdict"] == "pass");
}

TEST_CASE("fixture checker") {
  auto rep = check_example_fixtures();
  CHECK(rep.verdict == CheckReport::Verdict::Pass);
  CHECK(rep.witnesses["sq_6_3"]["nodes"] == 20);
  CHECK(rep.witnesses["sq_5_2"]["edges"] == 10);
}

TEST_CASE("barrel criteria comparison is report-only") {
  auto rep = check_barrel_criteria_divergence(4, 2);
  CHECK(rep.verdict == CheckReport::Verdict::ReportOnly);
  CHECK(rep.witnesses["divergence_count"] == 0);

  auto rep52 = check_barrel_criteria_divergence(5, 2);
  CHECK(rep52.verdict == CheckReport::Verdict::ReportOnly);
}

TEST_CASE("morphism checker at m=2, d=2") {
  auto rep = check_morphism_conjectures(2, 2);
  CHECK(rep.verdict == CheckReport::Verdict::Pass);
  CHECK(rep.witnesses["red"]["full"]["holds"] == true);
  CHECK(rep.witnesses["cor"]["surjective"]["holds"] == true);
}

TEST_CASE("canonical cubillage bytes") {
  CHECK(emit_cubillage(Cubillage::standard(5, 2)) == "{\"n\":5,\"d\":2,\"inversions\":[]}");
  CHECK(emit_cubillage(fix(5, 2, {{2, 3, 4}})) ==
        "{\"n\":5,\"d\":2,\"inversions\":[[2,3,4]]}");
  // equal cubillages, equal bytes
  auto a = fix(4, 1, {{2, 3}, {1, 3}});
  auto b = fix(4, 1, {{1, 3}, {2, 3}});
  CHECK(emit_cubillage(a) == emit_cubillage(b));
}

TEST_CASE("documents round-trip") {
  for (auto q : {Cubillage::standard(5, 2), Cubillage::antistandard(4, 1),
                 fix(5, 2, {{2, 3, 4}, {1, 3, 4}, {2, 3, 5}})}) {
    for (LabelMode mode : {LabelMode::Natural, LabelMode::Symmetric}) {
      std::string text = emit_cubillage(q, mode);
      ParsedCubillage back = parse_cubillage(text);
      CHECK(back.cubillage == q);
      CHECK(emit_cubillage(back.cubillage, back.mode) == text);
    }
  }
}

TEST_CASE("signed labels") {
  // n = 5: colors 1..5 map to -2,-1,0,1,2; n = 4: to -2,-1,1,2.
  CHECK(to_symmetric_label(1, 5) == -2);
  CHECK(to_symmetric_label(3, 5) == 0);
  CHECK(to_symmetric_label(4, 5) == 1);
  CHECK(to_symmetric_label(4, 4) == 2);
  CHECK(to_symmetric_label(2, 4) == -1);
  for (int n : {4, 5, 6, 7})
    for (int c = 1; c <= n; ++c) {
      CHECK(from_symmetric_label(to_symmetric_label(c, n), n) == c);
      // the involution is the sign change
      CHECK(to_symmetric_label(n + 1 - c, n) == -to_symmetric_label(c, n));
    }
  CHECK_THROWS_AS(from_symmetric_label(0, 4), InvalidInput);
  CHECK(emit_cubillage(fix(5, 2, {{2, 3, 4}}), LabelMode::Symmetric) ==
        "{\"n\":5,\"d\":2,\"inversions\":[[-1,0,1]],\"label_mode\":\"symmetric\"}");
}

TEST_CASE("malformed documents are rejected with positions") {
  CHECK_THROWS_WITH_AS(parse_cubillage("{\"n\":5,"), doctest::Contains("byte"), InvalidInput);
  CHECK_THROWS_AS(parse_cubillage("{\"n\":5,\"d\":2}"), InvalidInput);
  CHECK_THROWS_AS(parse_cubillage("{\"n\":5,\"d\":2,\"inversions\":[[1,1,2]]}"), InvalidInput);
  CHECK_THROWS_AS(parse_cubillage("{\"n\":5,\"d\":2,\"inversions\":[[1,2,6]]}"), InvalidInput);
  CHECK_THROWS_AS(parse_cubillage("{\"n\":5,\"d\":2,\"inversions\":[],\"label_mode\":\"x\"}"),
                  InvalidInput);
  // a bi-convexity violation is invalid input, reported with its stick
  CHECK_THROWS_WITH_AS(parse_cubillage("{\"n\":5,\"d\":3,\"inversions\":[[1,2,3,5]]}"),
                       doctest::Contains("12345"), InvalidInput);
}

TEST_CASE("digraph documents, dot and svg") {
  FlipDigraph g = build_class_digraph(5, 2, EnumClass::Symmetric);
  std::string doc = emit_digraph(g, "symmetric");
  DigraphDocument parsed = parse_digraph(doc);
  CHECK(parsed.nodes.size() == 10);
  CHECK(parsed.edges.size() == 10);
  CHECK(emit_digraph(g, "symmetric") == doc);  // deterministic

  std::string dot = digraph_to_dot(parsed);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("black:invis:black") != std::string::npos);  // double arrows
  CHECK(dot.find("style=bold") != std::string::npos);         // barrel arrows
  CHECK(digraph_to_dot(parsed) == dot);

  std::string svg = cubillage_to_svg(Cubillage::standard(5, 2), frame_default(5, 2));
  CHECK(svg.find("<svg") != std::string::npos);
  size_t polygons = 0;
  for (size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1))
    ++polygons;
  CHECK(polygons == 10);  // one rhombus per 2-subset of [5]
  CHECK(cubillage_to_svg(Cubillage::standard(5, 2), frame_default(5, 2)) == svg);
  CHECK_THROWS_AS(cubillage_to_svg(Cubillage::standard(5, 1), frame_default(5, 1)), InvalidInput);
}

TEST_CASE("count summaries") {
  CHECK(counts_csv({{5, 2, "all", 62}, {4, 1, "symmetric", 8}}) ==
        "n,d,class,count\n5,2,all,62\n4,1,symmetric,8\n");
}
