#include "zonocube/placement.hpp"

namespace zonocube {

ColorSet cube_base(const Cubillage& q, ColorSet type) {
  if (type.size() != q.d())
    throw InvalidInput("cube_base: " + type.to_string() + " is not a d-subset");
  if (!type.subset_of(ColorSet::full(q.n())))
    throw InvalidInput("cube_base: " + type.to_string() + " not within [n]");
  ColorSet base;
  for (int a = 1; a <= q.n(); ++a) {
    if (type.contains(a)) continue;
    bool in = q.contains(type.with(a));
    int r = type.count_above(a);
    if ((r % 2 == 1) ? !in : in) base = base.with(a);
  }
  return base;
}

Placement placement_of(const Cubillage& q) {
  Placement p;
  p.n = q.n();
  p.d = q.d();
  p.types = SubsetFamily(q.n(), q.d());
  p.base.reserve(p.types.size());
  for (int i = 0; i < p.types.size(); ++i) p.base.push_back(cube_base(q, p.types[i]));
  return p;
}

std::set<ColorSet> spectrum(const Cubillage& q) {
  std::set<ColorSet> verts;
  for (ColorSet type : enumerate_packets(q.n(), q.d())) {
    ColorSet base = cube_base(q, type);
    auto dirs = type.elements();
    // all 2^d corners of the cube
    for (uint64_t mask = 0; mask < (uint64_t{1} << dirs.size()); ++mask) {
      ColorSet v = base;
      for (size_t j = 0; j < dirs.size(); ++j)
        if ((mask >> j) & 1) v = v.with(dirs[j]);
      verts.insert(v);
    }
  }
  return verts;
}

bool barrel_fragment_exists(const Cubillage& q, ColorSet g) {
  if (g.size() != q.d() + 2)
    throw InvalidInput("barrel_fragment_exists: " + g.to_string() + " is not a (d+2)-subset");
  if (involute(g, q.n()) != g)
    throw InvalidInput("barrel_fragment_exists: " + g.to_string() + " is not symmetric");
  bool first = true;
  ColorSet common;
  for (int a : g.elements()) {
    for (int b : g.elements()) {
      if (b <= a) continue;
      ColorSet type = g.without(a).without(b);
      ColorSet outside = cube_base(q, type) - g;
      if (first) {
        common = outside;
        first = false;
      } else if (outside != common) {
        return false;
      }
    }
  }
  return true;
}

bool member_from_base(const Placement& p, ColorSet f, int a) {
  ColorSet type = f.without(a);
  ColorSet base = p.base_of(type);
  int r = type.count_above(a);
  bool in_base = base.contains(a);
  return (r % 2 == 0) ? in_base : !in_base;
}

ColorSet positive_half(ColorSet v, int n) {
  int m = n / 2;
  ColorSet out;
  for (int c : v.elements())
    if (c > m) out = out.with(c - m);
  return out;
}

Cubillage core_map(const Cubillage& q) {
  int n = q.n(), d = q.d();
  if (n % 2 != 0 || d % 2 != 0)
    throw InvalidInput("core: needs n and d both even, got n=" + std::to_string(n) +
                       " d=" + std::to_string(d));
  if (!q.symmetric()) throw InvalidInput("core: cubillage is not symmetric");
  int m = n / 2, dc = d / 2;

  // Bases of the half-dimensional cubes: one per symmetric cube type.
  Placement core_pl;
  core_pl.n = m;
  core_pl.d = dc;
  core_pl.types = SubsetFamily(m, dc);
  core_pl.base.resize(core_pl.types.size());
  for (int i = 0; i < core_pl.types.size(); ++i) {
    ColorSet half = core_pl.types[i];
    ColorSet full_type;
    for (int c : half.elements()) full_type = full_type.with(m + c).with(m + 1 - c);
    ColorSet base = cube_base(q, full_type);
    if (involute(base, n) != base)
      throw InternalCheckFailed("core: symmetric cube " + full_type.to_string() +
                                " has asymmetric base " + base.to_string());
    core_pl.base[i] = positive_half(base, n);
  }

  // Inverse parity rule, with all d/2+1 recovery choices forced to agree.
  InversionSet inv(m, dc);
  if (dc + 1 <= m) {
    for (ColorSet f : enumerate_packets(m, dc + 1)) {
      int seen = -1;
      for (int a : f.elements()) {
        int bit = member_from_base(core_pl, f, a) ? 1 : 0;
        if (seen < 0)
          seen = bit;
        else if (seen != bit)
          throw InternalCheckFailed("core: inconsistent recovery of " + f.to_string());
      }
      if (seen == 1) inv.members.insert(f);
    }
  }
  auto out = Cubillage::try_validated(std::move(inv));
  if (!out) throw InternalCheckFailed("core: recovered inversion set is not bi-convex");
  return *out;
}

}  // namespace zonocube
