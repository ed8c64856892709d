#include "zonocube/geometry.hpp"

#include <map>
#include <sstream>

namespace zonocube {

std::vector<Rat> Frame::xi(int color) const {
  if (color < 1 || color > n) throw InvalidInput("frame: color out of range");
  std::vector<Rat> col(d);
  Rat p = 1;
  for (int j = 0; j < d; ++j) {
    col[j] = p;
    p *= t[color - 1];
  }
  return col;
}

Rat rational_det(std::vector<std::vector<Rat>> m) {
  const size_t k = m.size();
  Rat det = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t pivot = col;
    while (pivot < k && m[pivot][col] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < k; ++row) {
      if (m[row][col] == 0) continue;
      Rat factor = m[row][col] / m[col][col];
      for (size_t j = col; j < k; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

Rat type_det(const Frame& f, ColorSet type) {
  auto cols = type.elements();
  std::vector<std::vector<Rat>> m(cols.size(), std::vector<Rat>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    auto col = f.xi(cols[j]);
    for (size_t i = 0; i < cols.size(); ++i) m[i][j] = col[i];
  }
  return rational_det(std::move(m));
}

Frame frame_from_t(int n, int d, std::vector<Rat> t) {
  if (n < 1 || n > 64 || d < 1 || d > n) throw InvalidInput("frame: bad n or d");
  if (static_cast<int>(t.size()) != n) throw InvalidInput("frame: expected n parameters");
  for (int i = 0; i + 1 < n; ++i)
    if (!(t[i] < t[i + 1])) throw InvalidInput("frame: parameters must be strictly increasing");
  for (int i = 0; i < n; ++i)
    if (t[i] != -t[n - 1 - i]) throw InvalidInput("frame: parameters must satisfy t_i = -t_{n+1-i}");
  Frame f{n, d, std::move(t)};
  for (ColorSet type : enumerate_packets(n, d))
    if (!(type_det(f, type) > 0))
      throw InvalidInput("frame: non-positive minor at columns " + type.to_string());
  return f;
}

Frame frame_default(int n, int d) {
  std::vector<Rat> t;
  int m = n / 2;
  for (int i = m; i >= 1; --i) t.push_back(Rat(-i));
  if (n % 2 == 1) t.push_back(Rat(0));
  for (int i = 1; i <= m; ++i) t.push_back(Rat(i));
  return frame_from_t(n, d, std::move(t));
}

namespace {

// Sign of the cofactor functional of span{xi_j : j in T} evaluated at xi_i:
// det of columns (T ascending, then i). Nonzero for any i outside T because
// any d columns of a cyclic frame are independent.
int support_sign(const Frame& f, const std::vector<int>& t_cols, int i) {
  const size_t k = t_cols.size() + 1;
  std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
  for (size_t j = 0; j < t_cols.size(); ++j) {
    auto col = f.xi(t_cols[j]);
    for (size_t r = 0; r < k; ++r) m[r][j] = col[r];
  }
  auto last = f.xi(i);
  for (size_t r = 0; r < k; ++r) m[r][k - 1] = last[r];
  Rat det = rational_det(std::move(m));
  if (det > 0) return 1;
  if (det < 0) return -1;
  return 0;
}

std::string facet_str(ColorSet type, ColorSet base) {
  return "(type " + type.to_string() + ", base " + base.to_string() + ")";
}

}  // namespace

TilingReport verify_placement(const Cubillage& q, const Placement& p, const Frame& f) {
  TilingReport rep;
  const int n = q.n(), d = q.d();
  if (p.n != n || p.d != d || f.n != n || f.d != d)
    throw InvalidInput("verify_placement: mismatched parameters");
  std::ostringstream why;

  // (a) one cube per type; total cube volume = zonotope volume
  {
    Rat placed = 0, total = 0;
    bool positive = true;
    for (int i = 0; i < p.types.size(); ++i) {
      Rat v = type_det(f, p.types[i]);
      if (!(v > 0)) positive = false;
      placed += v;
    }
    for (ColorSet type : enumerate_packets(n, d)) total += type_det(f, type);
    rep.volume_ok = positive && placed == total;
    if (!rep.volume_ok) why << "volume: placed " << placed << " vs zonotope " << total << "; ";
  }

  // (b) facet multiplicities, boundary support test for the single ones
  {
    rep.facets_ok = true;
    std::map<std::pair<uint64_t, uint64_t>, int> mult;
    for (int i = 0; i < p.types.size(); ++i) {
      ColorSet type = p.types[i];
      ColorSet base = p.base[i];
      if (!(base & type).empty() || !base.subset_of(ColorSet::full(n))) {
        rep.facets_ok = false;
        why << "facets: cube " << type.to_string() << " has bad base " << base.to_string() << "; ";
        break;
      }
      for (int b : type.elements()) {
        ColorSet t = type.without(b);
        ++mult[{t.bits(), base.bits()}];
        ++mult[{t.bits(), base.with(b).bits()}];
      }
    }
    if (rep.facets_ok) {
      std::map<uint64_t, std::pair<uint64_t, uint64_t>> side_cache;  // T -> (pos mask, neg mask)
      for (const auto& [key, count] : mult) {
        ColorSet t = ColorSet::from_bits(key.first);
        ColorSet base = ColorSet::from_bits(key.second);
        if (count > 2) {
          rep.facets_ok = false;
          why << "facets: " << facet_str(t, base) << " covered " << count << " times; ";
          break;
        }
        if (count == 2) continue;
        auto it = side_cache.find(t.bits());
        if (it == side_cache.end()) {
          uint64_t pos = 0, neg = 0;
          auto t_cols = t.elements();
          for (int i = 1; i <= n; ++i) {
            if (t.contains(i)) continue;
            int s = support_sign(f, t_cols, i);
            if (s > 0)
              pos |= uint64_t{1} << (i - 1);
            else if (s < 0)
              neg |= uint64_t{1} << (i - 1);
            else {
              rep.facets_ok = false;
              why << "facets: degenerate support functional for type " << t.to_string() << "; ";
            }
          }
          it = side_cache.emplace(t.bits(), std::make_pair(pos, neg)).first;
        }
        uint64_t b = base.bits();
        if (b != it->second.first && b != it->second.second) {
          rep.facets_ok = false;
          why << "facets: " << facet_str(t, base) << " is single but interior; ";
          break;
        }
      }
    }
  }

  // (c) vertex census
  {
    std::set<ColorSet> verts;
    for (int i = 0; i < p.types.size(); ++i) {
      auto dirs = p.types[i].elements();
      for (uint64_t mask = 0; mask < (uint64_t{1} << dirs.size()); ++mask) {
        ColorSet v = p.base[i];
        for (size_t j = 0; j < dirs.size(); ++j)
          if ((mask >> j) & 1) v = v.with(dirs[j]);
        verts.insert(v);
      }
    }
    uint64_t expect = 0;
    for (int k = 0; k <= d; ++k) expect += binomial(n, k);
    rep.vertices_ok = verts.size() == expect && verts.count(ColorSet()) && verts.count(ColorSet::full(n));
    if (!rep.vertices_ok)
      why << "vertices: got " << verts.size() << ", expected " << expect << "; ";
  }

  // (d) the placement determines the cubillage, consistently
  {
    rep.roundtrip_ok = true;
    if (d + 1 <= n) {
      for (ColorSet fpk : enumerate_packets(n, d + 1)) {
        int seen = -1;
        bool expected = q.contains(fpk);
        for (int a : fpk.elements()) {
          int bit = member_from_base(p, fpk, a) ? 1 : 0;
          if (seen < 0) seen = bit;
          if (bit != seen || bit != (expected ? 1 : 0)) {
            rep.roundtrip_ok = false;
            why << "roundtrip: packet " << fpk.to_string() << " recovery disagrees; ";
            break;
          }
        }
        if (!rep.roundtrip_ok) break;
      }
    }
  }

  rep.pass = rep.volume_ok && rep.facets_ok && rep.vertices_ok && rep.roundtrip_ok;
  rep.witness = why.str();
  return rep;
}

TilingReport verify_tiling(const Cubillage& q, const Frame& f) {
  return verify_placement(q, placement_of(q), f);
}

}  // namespace zonocube
