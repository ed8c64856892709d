#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zonocube/colors.hpp"

namespace zonocube {

// A raw inversion system: a set of (d+1)-subsets of [n]. May violate the
// Ziegler condition; only validated values (Cubillage) cross module
// boundaries.
struct InversionSet {
  int n = 0;
  int d = 0;
  std::set<ColorSet> members;  // canonical iteration order: lexicographic

  InversionSet() = default;
  InversionSet(int n, int d);
  InversionSet(int n, int d, const std::vector<ColorSet>& packets);

  bool contains(ColorSet f) const { return members.count(f) != 0; }
  void insert(ColorSet f);
  void erase(ColorSet f) { members.erase(f); }
  size_t rank() const { return members.size(); }

  bool operator==(const InversionSet& o) const {
    return n == o.n && d == o.d && members == o.members;
  }

  std::string to_string() const;
};

// Ziegler condition: for every (d+2)-subset G, the members lying in the stick
// of G form an initial or final interval of its lex order. Returns the
// lexicographically first violated stick packet, or nullopt when U is
// bi-convex.
std::optional<ColorSet> find_violation(const InversionSet& u);

// Interval test for one stick against a membership set (with one optional
// forced-in and forced-out element); true when the in-pattern along the stick
// has at most one 0/1 transition.
bool stick_biconvex(const Stick& st, const InversionSet& u, ColorSet forced_in = ColorSet(),
                    ColorSet forced_out = ColorSet());

// A validated inversion system.
class Cubillage {
public:
  // Throws InvalidInput naming the first violated stick.
  static Cubillage validated(InversionSet u);
  static std::optional<Cubillage> try_validated(InversionSet u);
  // Fast path for values produced by flip application / enumeration, where
  // bi-convexity is guaranteed by construction.
  static Cubillage trusted(InversionSet u) { return Cubillage(std::move(u)); }

  static Cubillage standard(int n, int d);
  static Cubillage antistandard(int n, int d);

  const InversionSet& inv() const { return inv_; }
  int n() const { return inv_.n; }
  int d() const { return inv_.d; }
  size_t rank() const { return inv_.rank(); }
  bool contains(ColorSet f) const { return inv_.contains(f); }

  Cubillage complement() const;
  Cubillage involuted() const;

  struct SymmetryFlags {
    bool symmetric = false;
    bool skew_symmetric = false;
  };
  SymmetryFlags symmetry_class() const;
  bool symmetric() const { return symmetry_class().symmetric; }
  bool skew_symmetric() const { return symmetry_class().skew_symmetric; }

  bool operator==(const Cubillage& o) const { return inv_ == o.inv_; }
  bool operator!=(const Cubillage& o) const { return !(inv_ == o.inv_); }

  std::string to_string() const { return inv_.to_string(); }

private:
  explicit Cubillage(InversionSet u) : inv_(std::move(u)) {}
  InversionSet inv_;
};

// Node order used everywhere downstream: by rank, then lexicographic on the
// sorted member list.
bool canonical_less(const Cubillage& a, const Cubillage& b);

// Stable identity of a cubillage (member bitmasks in lex order), usable as a
// map key.
std::vector<uint64_t> canonical_key(const Cubillage& q);

}  // namespace zonocube
