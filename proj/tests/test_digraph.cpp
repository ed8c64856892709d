#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "zonocube/digraph.hpp"
#include "zonocube/io.hpp"

using namespace zonocube;

namespace {

std::map<std::string, int> kind_counts(const FlipDigraph& g) {
  std::map<std::string, int> out;
  for (const FlipEdge& e : g.edges) ++out[flip_kind_name(e.kind)];
  return out;
}

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_cubillages(5, 2, EnumClass::All).size() == 62);
  CHECK(enumerate_cubillages(4, 1, EnumClass::Symmetric).size() == 8);
  CHECK(enumerate_cubillages(5, 2, EnumClass::Symmetric).size() == 10);
  CHECK(enumerate_cubillages(4, 2, EnumClass::Symmetric).size() == 2);
  CHECK(enumerate_cubillages(5, 2, EnumClass::Skew).empty());
  CHECK(enumerate_cubillages(5, 1, EnumClass::Skew).empty());
}

TEST_CASE("every enumerated set is bi-convex and of its class") {
  for (EnumClass cls : {EnumClass::All, EnumClass::Symmetric, EnumClass::Skew}) {
    for (const Cubillage& q : enumerate_cubillages(5, 2, cls)) {
      CHECK_FALSE(find_violation(q.inv()));
      if (cls == EnumClass::Symmetric) CHECK(q.symmetric());
      if (cls == EnumClass::Skew) CHECK(q.skew_symmetric());
    }
  }
}

TEST_CASE("the symmetric class is the symmetric filter of the full class") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 1}, {4, 2}, {5, 2}, {6, 2}}) {
    std::vector<Cubillage> filtered;
    for (const Cubillage& q : enumerate_cubillages(n, d, EnumClass::All))
      if (q.symmetric()) filtered.push_back(q);
    CHECK(filtered == enumerate_cubillages(n, d, EnumClass::Symmetric));
  }
}

TEST_CASE("flip closures agree with direct enumeration") {
  CHECK(bfs_closure(Cubillage::standard(5, 2), GeneratorKind::TypeA) ==
        enumerate_cubillages(5, 2, EnumClass::All));
  auto sym63 = bfs_closure(Cubillage::standard(6, 3), GeneratorKind::Symmetric);
  CHECK(sym63 == enumerate_cubillages(6, 3, EnumClass::Symmetric));
  CHECK(sym63.size() == 20);
  CHECK(bfs_closure(Cubillage::standard(4, 2), GeneratorKind::Symmetric).size() == 2);
}

TEST_CASE("the printed ten-node digraph") {
  FlipDigraph g = build_class_digraph(5, 2, EnumClass::Symmetric);
  CHECK(g.nodes.size() == 10);
  CHECK(g.edges.size() == 10);
  auto counts = kind_counts(g);
  CHECK(counts["simple"] == 4);
  CHECK(counts["double"] == 4);
  CHECK(counts["barrel"] == 2);
  CHECK(g.sources() == std::vector<int>{g.index_of(Cubillage::standard(5, 2))});
  CHECK(g.sinks() == std::vector<int>{g.index_of(Cubillage::antistandard(5, 2))});
}

TEST_CASE("digraphs are ranked") {
  for (auto cls : {EnumClass::All, EnumClass::Symmetric}) {
    FlipDigraph g = build_class_digraph(5, 2, cls);
    for (const FlipEdge& e : g.edges) {
      CHECK(g.nodes[e.dst].rank() ==
            g.nodes[e.src].rank() + static_cast<size_t>(flip_rank_delta(e.kind, g.d)));
    }
  }
}

TEST_CASE("maximal chains") {
  CHECK(maximal_chains(build_class_digraph(4, 1, EnumClass::Symmetric)).chains.size() == 2);
  CHECK(maximal_chains(build_class_digraph(4, 2, EnumClass::Symmetric)).chains.size() == 1);
  CHECK(maximal_chains(build_class_digraph(3, 1, EnumClass::All)).chains.size() == 2);

  auto truncated = maximal_chains(build_class_digraph(4, 1, EnumClass::All), 3);
  CHECK(truncated.truncated);
  CHECK(truncated.chains.size() == 3);
}

TEST_CASE("chains run source to sink along consecutive edges") {
  FlipDigraph g = build_class_digraph(5, 2, EnumClass::Symmetric);
  auto chains = maximal_chains(g);
  CHECK_FALSE(chains.truncated);
  for (const Chain& ch : chains.chains) {
    REQUIRE_FALSE(ch.edges.empty());
    CHECK(g.nodes[g.edges[ch.edges.front()].src].rank() == 0);
    CHECK(g.nodes[g.edges[ch.edges.back()].dst].rank() == binomial(5, 3));
    for (size_t i = 0; i + 1 < ch.edges.size(); ++i)
      CHECK(g.edges[ch.edges[i]].dst == g.edges[ch.edges[i + 1]].src);
  }
}

TEST_CASE("reachability") {
  FlipDigraph g = build_class_digraph(5, 2, EnumClass::Symmetric);
  int std_id = g.index_of(Cubillage::standard(5, 2));
  int anti_id = g.index_of(Cubillage::antistandard(5, 2));
  CHECK(reachable(g, std_id, anti_id));
  CHECK_FALSE(reachable(g, anti_id, std_id));
  CHECK(reachable(g, std_id, std_id));

  FlipDigraph g41 = build_class_digraph(4, 1, EnumClass::Symmetric);
  InversionSet a(4, 1);
  a.insert(ColorSet::of({2, 3}));
  Cubillage qa = Cubillage::validated(std::move(a));
  int ia = g41.index_of(qa);
  int iab = g41.index_of(qa.complement());
  REQUIRE(ia >= 0);
  REQUIRE(iab >= 0);
  CHECK_FALSE(reachable(g41, ia, iab));  // the complement sits on the other row
}

TEST_CASE("worker count does not change the bytes") {
  SearchOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = 4;
  for (auto [n, d, cls] : std::vector<std::tuple<int, int, EnumClass>>{
           {5, 2, EnumClass::All}, {5, 2, EnumClass::Symmetric}, {6, 2, EnumClass::Symmetric}}) {
    FlipDigraph a = build_class_digraph(n, d, cls, serial);
    FlipDigraph b = build_class_digraph(n, d, cls, parallel);
    CHECK(emit_digraph(a, enum_class_name(cls)) == emit_digraph(b, enum_class_name(cls)));
  }
}

TEST_CASE("budget guard") {
  SearchOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(enumerate_cubillages(6, 2, EnumClass::All, tiny), BudgetExceeded);
}
