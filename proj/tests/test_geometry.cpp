#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zonocube/digraph.hpp"
#include "zonocube/geometry.hpp"

using namespace zonocube;

namespace {

Cubillage fix(int n, int d, std::initializer_list<std::initializer_list<int>> sets) {
  InversionSet u(n, d);
  for (auto s : sets) u.insert(ColorSet::of(s));
  return Cubillage::validated(std::move(u));
}

}  // namespace

TEST_CASE("default frames") {
  auto f42 = frame_default(4, 2);
  CHECK(f42.t == std::vector<Rat>{Rat(-2), Rat(-1), Rat(1), Rat(2)});
  auto f52 = frame_default(5, 2);
  CHECK(f52.t == std::vector<Rat>{Rat(-2), Rat(-1), Rat(0), Rat(1), Rat(2)});

  // 2x2 minors are differences t_j - t_i, all positive for increasing t.
  for (ColorSet type : enumerate_packets(4, 2)) {
    auto e = type.elements();
    CHECK(type_det(f42, type) == f42.t[e[1] - 1] - f42.t[e[0] - 1]);
    CHECK(type_det(f42, type) > 0);
  }
  CHECK_THROWS_AS(frame_from_t(3, 1, {Rat(-1), Rat(0), Rat(2)}), InvalidInput);  // asymmetric
  CHECK_THROWS_AS(frame_from_t(2, 1, {Rat(1), Rat(-1)}), InvalidInput);          // not increasing
}

TEST_CASE("cube bases") {
  for (int i = 1; i <= 5; ++i) {
    ColorSet want;
    for (int j = 1; j < i; ++j) want = want.with(j);
    CHECK(cube_base(Cubillage::standard(5, 1), ColorSet::of({i})) == want);
  }
  CHECK(cube_base(Cubillage::antistandard(5, 1), ColorSet::of({3})) == ColorSet::of({4, 5}));
  CHECK(cube_base(Cubillage::standard(5, 2), ColorSet::of({2, 4})) == ColorSet::of({3}));
}

TEST_CASE("spectra") {
  auto s21 = spectrum(Cubillage::standard(2, 1));
  CHECK(s21 == std::set<ColorSet>{ColorSet(), ColorSet::of({1}), ColorSet::of({1, 2})});
  auto a21 = spectrum(Cubillage::antistandard(2, 1));
  CHECK(a21 == std::set<ColorSet>{ColorSet(), ColorSet::of({2}), ColorSet::of({1, 2})});

  for (const Cubillage& q : enumerate_cubillages(5, 2, EnumClass::All))
    CHECK(spectrum(q).size() == 16);
}

TEST_CASE("spectrum respects the geometric involution") {
  // The reflection sends each guiding vector to (-1)^d times its mirror, so
  // on vertex labels it acts as V -> V° for d even and V -> ([n]-V)° for d
  // odd.
  for (auto [n, d] : std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {6, 3}}) {
    for (const Cubillage& q : enumerate_cubillages(n, d, EnumClass::All)) {
      std::set<ColorSet> image;
      for (ColorSet v : spectrum(q))
        image.insert(involute(d % 2 == 0 ? v : ColorSet::full(n) - v, n));
      CHECK(spectrum(q.involuted()) == image);
    }
  }
}

TEST_CASE("the tiling oracle accepts the standard tiling") {
  auto rep = verify_tiling(Cubillage::standard(5, 2), frame_default(5, 2));
  CHECK(rep.pass);
  CHECK(rep.volume_ok);
  CHECK(rep.facets_ok);
  CHECK(rep.vertices_ok);
  CHECK(rep.roundtrip_ok);
}

TEST_CASE("the tiling oracle rejects a corrupted placement") {
  auto q = Cubillage::standard(5, 2);
  Placement p = placement_of(q);
  // swap the bases of the cubes 12 and 24 (empty vs {3})
  std::swap(p.base[p.types.rank(ColorSet::of({1, 2}))],
            p.base[p.types.rank(ColorSet::of({2, 4}))]);
  auto rep = verify_placement(q, p, frame_default(5, 2));
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.facets_ok);
}

TEST_CASE("the tiling oracle accepts every cubillage of Z(5,2)") {
  auto frame = frame_default(5, 2);
  for (const Cubillage& q : enumerate_cubillages(5, 2, EnumClass::All)) {
    auto rep = verify_tiling(q, frame);
    CAPTURE(q.to_string());
    CAPTURE(rep.witness);
    CHECK(rep.pass);
  }
}

TEST_CASE("barrel fragments") {
  auto c = fix(5, 2, {{2, 3, 4}, {1, 3, 4}, {2, 3, 5}, {1, 3, 5}});
  CHECK(barrel_fragment_exists(c, ColorSet::of({1, 2, 4, 5})));
  CHECK_FALSE(barrel_fragment_exists(Cubillage::standard(5, 2), ColorSet::of({1, 2, 4, 5})));
  CHECK(barrel_fragment_exists(Cubillage::standard(4, 2), ColorSet::of({1, 2, 3, 4})));
  CHECK_THROWS_AS(barrel_fragment_exists(Cubillage::standard(5, 2), ColorSet::of({1, 2, 3, 4})),
                  InvalidInput);  // not symmetric
}

TEST_CASE("core of the (4,2) tilings") {
  CHECK(core_map(Cubillage::standard(4, 2)) == Cubillage::standard(2, 1));
  CHECK(core_map(Cubillage::antistandard(4, 2)) == Cubillage::antistandard(2, 1));
  CHECK_THROWS_AS(core_map(Cubillage::standard(5, 2)), InvalidInput);  // n odd
  CHECK_THROWS_AS(core_map(Cubillage::standard(4, 1)), InvalidInput);  // d odd
  CHECK_THROWS_AS(core_map(fix(4, 2, {{1, 2, 3}})), InvalidInput);     // not symmetric
}

TEST_CASE("core is a valid half-dimensional cubillage on all of SQ(6,2)") {
  for (const Cubillage& q : enumerate_cubillages(6, 2, EnumClass::Symmetric)) {
    Cubillage c = core_map(q);
    CHECK(c.n() == 3);
    CHECK(c.d() == 1);
  }
}
