#pragma once

#include "zonocube/inversion.hpp"

namespace zonocube {

enum class FlipKind : uint8_t { TypeA, Simple, Double, Barrel };
enum class FlipDir : uint8_t { Raise, Lower };

const char* flip_kind_name(FlipKind k);

// Rank change of a raising flip of this kind.
int flip_rank_delta(FlipKind k, int d);

// A symmetric flip descriptor.
//   Simple: packet = F with F° = F.
//   Double: packet/partner = the pair {F, F°}, packet lex-smaller, with the
//           two capsids sharing no cube (|F ∩ F°| <= d-1).
//   Barrel: packet = the symmetric (d+2)-subset G; the flip moves the whole
//           stick of G.
struct SymFlip {
  FlipKind kind = FlipKind::Simple;
  ColorSet packet;
  ColorSet partner;

  // Inversions added by raising (removed by lowering), in lex order.
  std::vector<ColorSet> moved_packets() const;

  bool operator==(const SymFlip& o) const {
    return kind == o.kind && packet == o.packet && partner == o.partner;
  }
  std::string to_string() const;
};

// Incremental Ziegler checks: only sticks through f are examined; the result
// agrees with full revalidation of members ± f.
bool is_addable(const InversionSet& u, ColorSet f);
bool is_removable(const InversionSet& u, ColorSet f);

// Capsid flips of the plain flip digraph: packets whose addition (removal)
// keeps the system bi-convex. Lex order.
std::vector<ColorSet> raising_flips_A(const Cubillage& q);
std::vector<ColorSet> lowering_flips_A(const Cubillage& q);

// Symmetric flips applicable to a symmetric cubillage, in canonical order
// (simple, then double, then barrel; lex within each kind). Barrel
// applicability requires the stick move to stay bi-convex and, when
// fragment_check is set, the d+2 cubes of the barrel to geometrically
// assemble (barrel_fragment_exists).
std::vector<SymFlip> symmetric_raising_flips(const Cubillage& q, bool fragment_check = true);
std::vector<SymFlip> symmetric_lowering_flips(const Cubillage& q, bool fragment_check = true);

// Validity-only barrel applicability, without the fragment test. Exposed so
// the two criteria can be compared instance by instance.
bool barrel_move_valid(const Cubillage& q, ColorSet g, FlipDir dir);
bool barrel_stick_clear(const Cubillage& q, ColorSet g, FlipDir dir);

Cubillage apply_flip_A(const Cubillage& q, ColorSet f, FlipDir dir);
Cubillage apply_sym_flip(const Cubillage& q, const SymFlip& flip, FlipDir dir,
                         bool fragment_check = true);

}  // namespace zonocube
