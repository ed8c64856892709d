#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "zonocube/placement.hpp"

namespace zonocube {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A cyclic Veronese frame: parameters t_1 < ... < t_n with t_i = -t_{n+1-i},
// guiding vectors xi_i = (1, t_i, ..., t_i^{d-1}). All maximal minors on
// increasing column sets are positive (checked at construction).
struct Frame {
  int n = 0, d = 0;
  std::vector<Rat> t;

  // Column vector xi_i, exact.
  std::vector<Rat> xi(int color) const;
};

// t = (-m,...,-1,1,...,m) for n = 2m, with 0 inserted for n = 2m+1.
Frame frame_default(int n, int d);

// Validates monotonicity, symmetry and cyclicity of a custom parameter list.
Frame frame_from_t(int n, int d, std::vector<Rat> t);

// Exact determinant (Gaussian elimination over the rationals).
Rat rational_det(std::vector<std::vector<Rat>> m);

// det of the d x d matrix with columns xi_i, i in D ascending.
Rat type_det(const Frame& f, ColorSet type);

struct TilingReport {
  bool pass = false;
  bool volume_ok = false;     // sum of cube volumes equals the zonotope volume
  bool facets_ok = false;     // facet multiplicity <= 2; single facets on the boundary
  bool vertices_ok = false;   // spectrum size = sum_{k<=d} C(n,k), contains {} and [n]
  bool roundtrip_ok = false;  // inverse parity rule recovers the inversion set, all choices agree
  std::string witness;        // first failure, human-readable
};

// Independent oracle for the placement rule: checks that the placed cubes
// really form a tiling of the zonotope and that the placement determines the
// cubillage. Exact arithmetic throughout.
TilingReport verify_tiling(const Cubillage& q, const Frame& f);

// Same, for an externally supplied placement (lets tests feed corrupted data).
TilingReport verify_placement(const Cubillage& q, const Placement& p, const Frame& f);

}  // namespace zonocube
