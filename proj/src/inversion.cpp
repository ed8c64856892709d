#include "zonocube/inversion.hpp"

#include <algorithm>
#include <sstream>

namespace zonocube {

namespace {

void check_params(int n, int d) {
  if (n < 1 || n > 64) throw InvalidInput("color count n=" + std::to_string(n) + " out of range 1..64");
  if (d < 1 || d > n)
    throw InvalidInput("dimension d=" + std::to_string(d) + " out of range 1..n=" + std::to_string(n));
}

}  // namespace

InversionSet::InversionSet(int n_, int d_) : n(n_), d(d_) { check_params(n_, d_); }

InversionSet::InversionSet(int n_, int d_, const std::vector<ColorSet>& packets) : InversionSet(n_, d_) {
  for (ColorSet f : packets) insert(f);
}

void InversionSet::insert(ColorSet f) {
  if (f.size() != d + 1)
    throw InvalidInput("inversion " + f.to_string() + " is not a " + std::to_string(d + 1) +
                       "-subset");
  if (!f.subset_of(ColorSet::full(n)))
    throw InvalidInput("inversion " + f.to_string() + " not contained in [" + std::to_string(n) + "]");
  members.insert(f);
}

std::string InversionSet::to_string() const {
  std::ostringstream os;
  os << "(" << n << "," << d << "){";
  bool first = true;
  for (ColorSet f : members) {
    if (!first) os << ",";
    first = false;
    os << f.to_string();
  }
  os << "}";
  return os.str();
}

bool stick_biconvex(const Stick& st, const InversionSet& u, ColorSet forced_in, ColorSet forced_out) {
  int transitions = 0;
  int prev = -1;
  for (ColorSet m : st.members) {
    int bit;
    if (m == forced_in)
      bit = 1;
    else if (m == forced_out)
      bit = 0;
    else
      bit = u.contains(m) ? 1 : 0;
    if (prev >= 0 && bit != prev) ++transitions;
    prev = bit;
  }
  return transitions <= 1;
}

std::optional<ColorSet> find_violation(const InversionSet& u) {
  if (u.d + 2 > u.n) return std::nullopt;  // no sticks at all
  for (ColorSet g : enumerate_packets(u.n, u.d + 2)) {
    if (!stick_biconvex(stick_members(g), u)) return g;
  }
  return std::nullopt;
}

Cubillage Cubillage::validated(InversionSet u) {
  if (auto bad = find_violation(u))
    throw InvalidInput("not bi-convex: stick " + bad->to_string() +
                       " meets the set in a non-interval pattern");
  return Cubillage(std::move(u));
}

std::optional<Cubillage> Cubillage::try_validated(InversionSet u) {
  if (find_violation(u)) return std::nullopt;
  return Cubillage(std::move(u));
}

Cubillage Cubillage::standard(int n, int d) { return Cubillage(InversionSet(n, d)); }

Cubillage Cubillage::antistandard(int n, int d) {
  InversionSet u(n, d);
  if (d + 1 <= n)
    for (ColorSet f : enumerate_packets(n, d + 1)) u.members.insert(f);
  return Cubillage(std::move(u));
}

Cubillage Cubillage::complement() const {
  InversionSet u(n(), d());
  if (d() + 1 <= n()) {
    for (ColorSet f : enumerate_packets(n(), d() + 1))
      if (!contains(f)) u.members.insert(f);
  }
  // Complements of bi-convex systems are bi-convex (initial and final
  // intervals swap roles).
  if (auto bad = find_violation(u))
    throw InternalCheckFailed("complement lost bi-convexity at stick " + bad->to_string());
  return Cubillage(std::move(u));
}

Cubillage Cubillage::involuted() const {
  InversionSet u(n(), d());
  for (ColorSet f : inv_.members) u.members.insert(involute(f, n()));
  if (auto bad = find_violation(u))
    throw InternalCheckFailed("involution lost bi-convexity at stick " + bad->to_string());
  return Cubillage(std::move(u));
}

Cubillage::SymmetryFlags Cubillage::symmetry_class() const {
  SymmetryFlags flags;
  bool sym = true;
  bool skew = true;
  for (ColorSet f : inv_.members) {
    ColorSet fo = involute(f, n());
    if (!contains(fo)) sym = false;
    if (contains(fo)) skew = false;
    if (!sym && !skew) break;
  }
  flags.symmetric = sym;
  // S° equals the complement iff no member maps into S and the sizes add up.
  uint64_t total = (d() + 1 <= n()) ? binomial(n(), d() + 1) : 0;
  flags.skew_symmetric = skew && 2 * inv_.rank() == total;
  return flags;
}

bool canonical_less(const Cubillage& a, const Cubillage& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  return std::lexicographical_compare(a.inv().members.begin(), a.inv().members.end(),
                                      b.inv().members.begin(), b.inv().members.end());
}

std::vector<uint64_t> canonical_key(const Cubillage& q) {
  std::vector<uint64_t> key;
  key.reserve(q.rank());
  for (ColorSet f : q.inv().members) key.push_back(f.bits());
  return key;
}

}  // namespace zonocube
