#include "zonocube/flips.hpp"

#include <algorithm>

#include "zonocube/placement.hpp"

namespace zonocube {

const char* flip_kind_name(FlipKind k) {
  switch (k) {
    case FlipKind::TypeA: return "typeA";
    case FlipKind::Simple: return "simple";
    case FlipKind::Double: return "double";
    case FlipKind::Barrel: return "barrel";
  }
  return "?";
}

int flip_rank_delta(FlipKind k, int d) {
  switch (k) {
    case FlipKind::TypeA:
    case FlipKind::Simple: return 1;
    case FlipKind::Double: return 2;
    case FlipKind::Barrel: return d + 2;
  }
  return 0;
}

std::vector<ColorSet> SymFlip::moved_packets() const {
  switch (kind) {
    case FlipKind::TypeA:
    case FlipKind::Simple: return {packet};
    case FlipKind::Double: return {packet, partner};
    case FlipKind::Barrel: return stick_members(packet).members;
  }
  return {};
}

std::string SymFlip::to_string() const {
  std::string s = flip_kind_name(kind);
  s += "(";
  s += packet.to_string();
  if (kind == FlipKind::Double) s += "," + partner.to_string();
  s += ")";
  return s;
}

bool is_addable(const InversionSet& u, ColorSet f) {
  if (u.contains(f)) return false;
  for (int a = 1; a <= u.n; ++a) {
    if (f.contains(a)) continue;
    if (!stick_biconvex(stick_members(f.with(a)), u, /*forced_in=*/f)) return false;
  }
  return true;
}

bool is_removable(const InversionSet& u, ColorSet f) {
  if (!u.contains(f)) return false;
  for (int a = 1; a <= u.n; ++a) {
    if (f.contains(a)) continue;
    if (!stick_biconvex(stick_members(f.with(a)), u, ColorSet(), /*forced_out=*/f)) return false;
  }
  return true;
}

std::vector<ColorSet> raising_flips_A(const Cubillage& q) {
  std::vector<ColorSet> out;
  if (q.d() + 1 > q.n()) return out;
  for (ColorSet f : enumerate_packets(q.n(), q.d() + 1))
    if (!q.contains(f) && is_addable(q.inv(), f)) out.push_back(f);
  return out;
}

std::vector<ColorSet> lowering_flips_A(const Cubillage& q) {
  std::vector<ColorSet> out;
  for (ColorSet f : q.inv().members)
    if (is_removable(q.inv(), f)) out.push_back(f);
  return out;
}

bool barrel_stick_clear(const Cubillage& q, ColorSet g, FlipDir dir) {
  for (ColorSet m : stick_members(g).members) {
    bool in = q.contains(m);
    if (dir == FlipDir::Raise ? in : !in) return false;
  }
  return true;
}

bool barrel_move_valid(const Cubillage& q, ColorSet g, FlipDir dir) {
  if (!barrel_stick_clear(q, g, dir)) return false;
  InversionSet u = q.inv();
  for (ColorSet m : stick_members(g).members) {
    if (dir == FlipDir::Raise)
      u.members.insert(m);
    else
      u.members.erase(m);
  }
  return !find_violation(u).has_value();
}

namespace {

void require_symmetric(const Cubillage& q, const char* op) {
  if (!q.symmetric())
    throw InvalidInput(std::string(op) + ": cubillage is not symmetric: " + q.to_string());
}

// Shared body of the two symmetric flip detectors; Raise scans additions,
// Lower scans removals.
std::vector<SymFlip> symmetric_flips(const Cubillage& q, FlipDir dir, bool fragment_check) {
  std::vector<SymFlip> out;
  const int n = q.n(), d = q.d();

  auto movable = [&](const InversionSet& u, ColorSet f) {
    return dir == FlipDir::Raise ? is_addable(u, f) : is_removable(u, f);
  };
  auto present_ok = [&](ColorSet f) {
    return dir == FlipDir::Raise ? !q.contains(f) : q.contains(f);
  };

  std::vector<SymFlip> doubles;
  if (d + 1 <= n) {
    for (ColorSet f : enumerate_packets(n, d + 1)) {
      ColorSet fo = involute(f, n);
      if (fo == f) {
        if (present_ok(f) && movable(q.inv(), f))
          out.push_back({FlipKind::Simple, f, ColorSet()});
      } else if (f < fo) {
        // capsids of types F and F° share a cube exactly when they share a
        // d-subset of colors
        if ((f & fo).size() > d - 1) continue;
        if (!present_ok(f)) continue;
        if (!movable(q.inv(), f)) continue;
        InversionSet step = q.inv();
        if (dir == FlipDir::Raise)
          step.members.insert(f);
        else
          step.members.erase(f);
        if (!movable(step, fo)) continue;
        doubles.push_back({FlipKind::Double, f, fo});
      }
    }
  }
  out.insert(out.end(), doubles.begin(), doubles.end());

  if (d + 2 <= n) {
    for (ColorSet g : enumerate_packets(n, d + 2)) {
      if (involute(g, n) != g) continue;
      if (!barrel_move_valid(q, g, dir)) continue;
      if (fragment_check && !barrel_fragment_exists(q, g)) continue;
      out.push_back({FlipKind::Barrel, g, ColorSet()});
    }
  }
  return out;
}

}  // namespace

std::vector<SymFlip> symmetric_raising_flips(const Cubillage& q, bool fragment_check) {
  require_symmetric(q, "symmetric_raising_flips");
  return symmetric_flips(q, FlipDir::Raise, fragment_check);
}

std::vector<SymFlip> symmetric_lowering_flips(const Cubillage& q, bool fragment_check) {
  require_symmetric(q, "symmetric_lowering_flips");
  return symmetric_flips(q, FlipDir::Lower, fragment_check);
}

Cubillage apply_flip_A(const Cubillage& q, ColorSet f, FlipDir dir) {
  bool ok = dir == FlipDir::Raise ? is_addable(q.inv(), f) : is_removable(q.inv(), f);
  if (!ok)
    throw FlipRejected("capsid flip on " + f.to_string() + " not applicable to " + q.to_string());
  InversionSet u = q.inv();
  if (dir == FlipDir::Raise)
    u.insert(f);
  else
    u.erase(f);
  return Cubillage::trusted(std::move(u));
}

Cubillage apply_sym_flip(const Cubillage& q, const SymFlip& flip, FlipDir dir, bool fragment_check) {
  require_symmetric(q, "apply_sym_flip");
  const int n = q.n(), d = q.d();
  auto moved = flip.moved_packets();

  switch (flip.kind) {
    case FlipKind::TypeA:
      return apply_flip_A(q, flip.packet, dir);
    case FlipKind::Simple: {
      if (involute(flip.packet, n) != flip.packet)
        throw FlipRejected("simple flip packet " + flip.packet.to_string() + " is not symmetric");
      return apply_flip_A(q, flip.packet, dir);
    }
    case FlipKind::Double: {
      if (involute(flip.packet, n) != flip.partner)
        throw FlipRejected("double flip pair " + flip.to_string() + " is not an involution orbit");
      if ((flip.packet & flip.partner).size() > d - 1)
        throw FlipRejected("double flip capsids " + flip.to_string() + " share a cube");
      Cubillage mid = apply_flip_A(q, flip.packet, dir);  // intermediate is generally asymmetric
      return apply_flip_A(mid, flip.partner, dir);
    }
    case FlipKind::Barrel: {
      ColorSet g = flip.packet;
      if (involute(g, n) != g)
        throw FlipRejected("barrel " + g.to_string() + " is not symmetric");
      if (!barrel_stick_clear(q, g, dir))
        throw FlipRejected("barrel " + g.to_string() + " stick is not uniformly " +
                           (dir == FlipDir::Raise ? "absent" : "present"));
      if (!barrel_move_valid(q, g, dir))
        throw FlipRejected("barrel move on " + g.to_string() + " breaks bi-convexity");
      if (fragment_check && !barrel_fragment_exists(q, g))
        throw FlipRejected("no barrel fragment at " + g.to_string() +
                           ": cube bases disagree outside the barrel");
      InversionSet u = q.inv();
      for (ColorSet m : moved) {
        if (dir == FlipDir::Raise)
          u.members.insert(m);
        else
          u.members.erase(m);
      }
      return Cubillage::trusted(std::move(u));
    }
  }
  throw FlipRejected("unknown flip kind");
}

}  // namespace zonocube
