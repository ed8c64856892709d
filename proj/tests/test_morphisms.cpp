#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "zonocube/morphisms.hpp"

using namespace zonocube;

namespace {

Cubillage fix(int n, int d, std::initializer_list<std::initializer_list<int>> sets) {
  InversionSet u(n, d);
  for (auto s : sets) u.insert(ColorSet::of(s));
  return Cubillage::validated(std::move(u));
}

const Cubillage ex5_O = Cubillage::standard(5, 2);
const Cubillage ex5_A = fix(5, 2, {{2, 3, 4}});
const Cubillage ex5_B = fix(5, 2, {{2, 3, 4}, {1, 3, 4}, {2, 3, 5}});
const Cubillage ex5_C = fix(5, 2, {{2, 3, 4}, {1, 3, 4}, {2, 3, 5}, {1, 3, 5}});
const Cubillage ex5_D = fix(5, 2, {{2, 3, 4}, {1, 3, 4}, {2, 3, 5}, {1, 3, 5},
                                   {1, 2, 4}, {1, 2, 5}, {1, 4, 5}, {2, 4, 5}});

}  // namespace

TEST_CASE("middle-color reduction of the ten-node fixture") {
  auto std42 = Cubillage::standard(4, 2);
  auto anti42 = Cubillage::antistandard(4, 2);
  CHECK(reduce_middle(ex5_O) == std42);
  CHECK(reduce_middle(ex5_A) == std42);
  CHECK(reduce_middle(ex5_B) == std42);
  CHECK(reduce_middle(ex5_C) == std42);
  CHECK(reduce_middle(ex5_D.complement()) == std42);
  CHECK(reduce_middle(ex5_D) == anti42);
  CHECK(reduce_middle(ex5_O.complement()) == anti42);
  CHECK(reduce_middle(ex5_A.complement()) == anti42);

  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 1}, {5, 2}, {5, 3}, {7, 2}})
    CHECK(reduce_middle(Cubillage::standard(n, d)) == Cubillage::standard(n - 1, d));

  CHECK_THROWS_AS(reduce_middle(Cubillage::standard(4, 2)), InvalidInput);  // n even
  CHECK_THROWS_AS(reduce_middle(fix(5, 2, {{1, 2, 3}})), InvalidInput);     // not symmetric
}

TEST_CASE("reduction preserves symmetry and validity on all of SQ(5,2) and SQ(7,2)") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {7, 2}})
    for (const Cubillage& q : enumerate_cubillages(n, d, EnumClass::Symmetric))
      CHECK(reduce_middle(q).symmetric());
}

TEST_CASE("reduction morphism at m=2, d=2") {
  FlipDigraph src = build_class_digraph(5, 2, EnumClass::Symmetric);
  FlipDigraph dst = build_class_digraph(4, 2, EnumClass::Symmetric);
  MorphismReport rep = red_fibers(src, dst);
  CHECK(rep.arrow_consistent);
  CHECK(rep.surjective);
  CHECK(rep.full);
  CHECK(rep.fibers_connected);
  REQUIRE(rep.fibers.size() == 2);
  CHECK(rep.fibers[0].size() == 5);
  CHECK(rep.fibers[1].size() == 5);

  // The standard fiber consists of the lower chain and the complement of the top.
  std::set<int> want = {src.index_of(ex5_O), src.index_of(ex5_A), src.index_of(ex5_B),
                        src.index_of(ex5_C), src.index_of(ex5_D.complement())};
  std::set<int> got(rep.fibers[dst.index_of(Cubillage::standard(4, 2))].begin(),
                    rep.fibers[dst.index_of(Cubillage::standard(4, 2))].end());
  CHECK(got == want);
}

TEST_CASE("arrow-kind casework of the reduction") {
  // d even: a simple arrow adds a packet through the middle color.
  FlipDigraph sq52 = build_class_digraph(5, 2, EnumClass::Symmetric);
  for (size_t i = 0; i < sq52.edges.size(); ++i)
    if (sq52.edges[i].kind == FlipKind::Simple)
      for (ColorSet f : sq52.added_packets(static_cast<int>(i))) CHECK(f.contains(3));

  // d odd: a barrel arrow contracts to a simple step; the stick's middle-free
  // member is its central one.
  FlipDigraph sq51 = build_class_digraph(5, 1, EnumClass::Symmetric);
  for (const FlipEdge& e : sq51.edges) {
    if (e.kind != FlipKind::Barrel) continue;
    Cubillage a = reduce_middle(sq51.nodes[e.src]);
    Cubillage b = reduce_middle(sq51.nodes[e.dst]);
    CHECK(b.rank() == a.rank() + 1);
  }
  for (ColorSet g : enumerate_packets(5, 3)) {
    if (involute(g, 5) != g || !g.contains(3)) continue;
    auto members = stick_members(g).members;
    for (size_t i = 0; i < members.size(); ++i)
      CHECK(members[i].contains(3) == (i != members.size() / 2));
  }
}

TEST_CASE("chain lifting of the signed ladder") {
  FlipDigraph g = build_class_digraph(4, 1, EnumClass::Symmetric);
  auto chains = maximal_chains(g);
  REQUIRE(chains.chains.size() == 2);

  std::vector<Cubillage> lifts;
  for (const Chain& ch : chains.chains) lifts.push_back(lift_chain(g, ch));
  std::sort(lifts.begin(), lifts.end(), canonical_less);

  CHECK(lifts[0] == fix(4, 2, {{1, 2, 3}, {1, 2, 4}}));
  CHECK(lifts[1] == fix(4, 2, {{1, 3, 4}, {2, 3, 4}}));
  for (const Cubillage& q : lifts) CHECK(q.skew_symmetric());

  // Jointly the lifts are the whole skew class one dimension up.
  CHECK(lifts == enumerate_cubillages(4, 2, EnumClass::Skew));
}

TEST_CASE("barrel arrows leave holes") {
  FlipDigraph g = build_class_digraph(5, 1, EnumClass::Symmetric);
  auto chains = maximal_chains(g);
  REQUIRE_FALSE(chains.chains.empty());
  for (const Chain& ch : chains.chains) CHECK_THROWS_AS(lift_chain(g, ch), BarrelHole);
}

TEST_CASE("plain chains generate the next order") {
  FlipDigraph g = build_class_digraph(4, 1, EnumClass::All);
  auto chains = maximal_chains(g);
  CHECK(chains.chains.size() == 16);  // standard Young tableaux of the staircase
  std::set<std::vector<uint64_t>> lifted;
  for (const Chain& ch : chains.chains) lifted.insert(canonical_key(lift_chain(g, ch)));
  auto all42 = enumerate_cubillages(4, 2, EnumClass::All);
  CHECK(all42.size() == 8);
  std::set<std::vector<uint64_t>> want;
  for (const Cubillage& q : all42) want.insert(canonical_key(q));
  CHECK(lifted == want);
}

TEST_CASE("identity map passes every check") {
  FlipDigraph g = build_class_digraph(5, 2, EnumClass::Symmetric);
  DigraphMap id = make_digraph_map(g, g, [](const Cubillage& q) { return q; });
  MorphismReport rep = check_digraph_map(id);
  CHECK(rep.arrow_consistent);
  CHECK(rep.surjective);
  CHECK(rep.full);
  CHECK(rep.fibers_connected);
}

TEST_CASE("core projection SQ(6,2) -> Q(3,1)") {
  FlipDigraph src = build_class_digraph(6, 2, EnumClass::Symmetric);
  FlipDigraph dst = build_class_digraph(3, 1, EnumClass::All);
  CHECK(dst.nodes.size() == 6);
  DigraphMap map = make_digraph_map(src, dst, core_map);
  MorphismReport rep = check_digraph_map(map);
  CHECK(rep.arrow_consistent);
  CHECK(rep.surjective);
  CHECK(rep.full);
  CHECK(rep.fibers_connected);
  CHECK(map.node_map[src.index_of(Cubillage::standard(6, 2))] ==
        dst.index_of(Cubillage::standard(3, 1)));

  for (const FlipEdge& e : src.edges) {
    int a = map.node_map[e.src], b = map.node_map[e.dst];
    if (e.kind == FlipKind::Double) CHECK(a == b);                   // invisible on the axis
    if (e.kind == FlipKind::Barrel) {                                // becomes a capsid step
      CHECK(a != b);
      CHECK(dst.nodes[b].rank() == dst.nodes[a].rank() + 1);
    }
    CHECK(e.kind != FlipKind::Simple);  // no symmetric capsids for d even
  }
}
