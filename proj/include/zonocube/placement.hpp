#pragma once

#include <set>

#include "zonocube/inversion.hpp"

namespace zonocube {

// The map cube type -> base vertex. A cubillage has exactly one cube per
// d-subset D of [n]; its base vertex is a subset of [n]-D, and the cube's
// vertex set is { base ∪ Y : Y ⊆ D }.
struct Placement {
  int n = 0, d = 0;
  SubsetFamily types;           // Gr(n,d), lex order
  std::vector<ColorSet> base;   // aligned with types

  ColorSet base_of(ColorSet type) const {
    int r = types.rank(type);
    if (r < 0) throw InvalidInput("placement: " + type.to_string() + " is not a cube type");
    return base[r];
  }
};

// Base vertex of the cube of type D (|D| = d): a color a outside D joins the
// base iff the parity of |{b in D : b > a}| disagrees with membership of
// D ∪ {a} in the inversion set.
ColorSet cube_base(const Cubillage& q, ColorSet type);

Placement placement_of(const Cubillage& q);

// Vertex set of the cubillage, as color subsets. Contains {} and [n]; its
// size is sum_{k<=d} C(n,k).
std::set<ColorSet> spectrum(const Cubillage& q);

// True iff the cubes whose types lie inside the symmetric (d+2)-subset G
// assemble into a translate of the barrel Z(G,d): all of their bases agree
// outside G. (Whether the filling is standard or anti-standard is read off
// separately from the stick of G.)
bool barrel_fragment_exists(const Cubillage& q, ColorSet g);

// Membership bit of F recovered from a placement through one choice a in F.
bool member_from_base(const Placement& p, ColorSet f, int a);

// The core of a symmetric cubillage with n = 2m and d both even: the cells cut
// out on the axial subspace by the symmetric cubes. Combinatorially, the
// symmetric cube of type R (R° = R) contributes the half-dimensional cube of
// type R⁺ based at the positive half of its base vertex; the inversion set of
// the resulting cubillage of Z([m], d/2) is recovered by the inverse parity
// rule (cross-choice consistency checked).
Cubillage core_map(const Cubillage& q);

// Positive-half relabelling used by the core: keeps colors > m and shifts
// them down to 1..m.
ColorSet positive_half(ColorSet v, int n);

}  // namespace zonocube
