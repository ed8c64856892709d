#include "zonocube/digraph.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace zonocube {

const char* enum_class_name(EnumClass c) {
  switch (c) {
    case EnumClass::All: return "all";
    case EnumClass::Symmetric: return "symmetric";
    case EnumClass::Skew: return "skew";
  }
  return "?";
}

namespace {

// Per-stick interval automaton. A stick's members are decided in lex order
// (global packet order restricted to a stick is its own lex order), so the
// final in-pattern is bi-convex iff the automaton never dies.
enum StickState : uint8_t { SS_EMPTY, SS_ONES, SS_ZEROS, SS_ONES_ZEROS, SS_ZEROS_ONES, SS_DEAD };

inline uint8_t ss_next(uint8_t s, int bit) {
  switch (s) {
    case SS_EMPTY: return bit ? SS_ONES : SS_ZEROS;
    case SS_ONES: return bit ? SS_ONES : SS_ONES_ZEROS;
    case SS_ZEROS: return bit ? SS_ZEROS_ONES : SS_ZEROS;
    case SS_ONES_ZEROS: return bit ? SS_DEAD : SS_ONES_ZEROS;
    case SS_ZEROS_ONES: return bit ? SS_ZEROS_ONES : SS_DEAD;
    default: return SS_DEAD;
  }
}

struct EnumUniverse {
  int n = 0, d = 0;
  std::vector<ColorSet> packets;                 // Gr(n,d+1), lex
  std::vector<std::vector<int>> packet_sticks;   // packet -> stick ids
  std::vector<int> invol;                        // packet -> involuted packet index
  int n_sticks = 0;

  EnumUniverse(int n_, int d_) : n(n_), d(d_) {
    if (d + 1 <= n) packets = enumerate_packets(n, d + 1);
    SubsetFamily pf = (d + 1 <= n) ? SubsetFamily(n, d + 1) : SubsetFamily();
    packet_sticks.assign(packets.size(), {});
    invol.assign(packets.size(), 0);
    for (size_t i = 0; i < packets.size(); ++i) {
      int j = pf.rank(involute(packets[i], n));
      invol[i] = j;
    }
    if (d + 2 <= n) {
      auto sticks = enumerate_packets(n, d + 2);
      n_sticks = static_cast<int>(sticks.size());
      for (int s = 0; s < n_sticks; ++s)
        for (ColorSet m : stick_members(sticks[s]).members) packet_sticks[pf.rank(m)].push_back(s);
    }
  }
};

struct EnumFrame {
  int depth = 0;
  std::vector<uint8_t> bit;
  std::vector<uint8_t> ss;
};

class Enumerator {
public:
  Enumerator(const EnumUniverse& u, EnumClass cls, Budget& budget)
      : u_(u), cls_(cls), budget_(budget) {}

  // Applies the decision bit[p] = v on top of `f`; returns false when a stick
  // dies or the class forces the other value.
  bool child(const EnumFrame& f, int v, EnumFrame& out) const {
    int p = f.depth;
    int q = u_.invol[p];
    if (cls_ == EnumClass::Symmetric && q < p && v != f.bit[q]) return false;
    if (cls_ == EnumClass::Skew) {
      if (q == p) return false;  // a self-symmetric packet kills the whole class
      if (q < p && v == f.bit[q]) return false;
    }
    out = f;
    for (int s : u_.packet_sticks[p]) {
      uint8_t ns = ss_next(out.ss[s], v);
      if (ns == SS_DEAD) return false;
      out.ss[s] = ns;
    }
    out.bit[p] = static_cast<uint8_t>(v);
    out.depth = p + 1;
    return true;
  }

  void dfs(EnumFrame& f, std::vector<Cubillage>& out) {
    bit_ = f.bit;
    ss_ = f.ss;
    run(f.depth, out);
  }

private:
  void run(int p, std::vector<Cubillage>& out) {
    budget_.charge();
    const int total = static_cast<int>(u_.packets.size());
    if (p == total) {
      InversionSet inv(u_.n, u_.d);
      for (int i = 0; i < total; ++i)
        if (bit_[i]) inv.members.insert(u_.packets[i]);
      out.push_back(Cubillage::trusted(std::move(inv)));
      return;
    }
    int q = u_.invol[p];
    if (cls_ == EnumClass::Skew && q == p) return;
    for (int v = 0; v <= 1; ++v) {
      if (cls_ == EnumClass::Symmetric && q < p && v != bit_[q]) continue;
      if (cls_ == EnumClass::Skew && q < p && v == bit_[q]) continue;
      const auto& sticks = u_.packet_sticks[p];
      std::array<uint8_t, 64> saved{};
      size_t applied = 0;
      bool alive = true;
      for (int s : sticks) {
        saved[applied++] = ss_[s];
        uint8_t ns = ss_next(ss_[s], v);
        ss_[s] = ns;
        if (ns == SS_DEAD) {
          alive = false;
          break;
        }
      }
      if (alive) {
        bit_[p] = static_cast<uint8_t>(v);
        run(p + 1, out);
      }
      while (applied > 0) {
        --applied;
        ss_[sticks[applied]] = saved[applied];
      }
    }
  }

  const EnumUniverse& u_;
  EnumClass cls_;
  Budget& budget_;
  std::vector<uint8_t> bit_;
  std::vector<uint8_t> ss_;
};

}  // namespace

std::vector<Cubillage> enumerate_cubillages(int n, int d, EnumClass cls, SearchOptions opts) {
  InversionSet probe(n, d);  // parameter validation
  (void)probe;
  EnumUniverse u(n, d);
  Budget budget(opts.budget);
  Enumerator en(u, cls, budget);

  EnumFrame root;
  root.depth = 0;
  root.bit.assign(u.packets.size(), 0);
  root.ss.assign(std::max(u.n_sticks, 1), SS_EMPTY);

  // Split the top of the search tree into frames, then scan each subtree
  // independently; canonical sorting makes the merge order immaterial.
  std::vector<EnumFrame> frames{root};
  const int total = static_cast<int>(u.packets.size());
  const int want = opts.threads > 1 ? opts.threads * 8 : 1;
  while (static_cast<int>(frames.size()) < want) {
    std::vector<EnumFrame> next;
    bool expanded = false;
    for (const auto& f : frames) {
      if (f.depth == total) {
        next.push_back(f);
        continue;
      }
      expanded = true;
      budget.charge();
      EnumFrame c;
      for (int v = 0; v <= 1; ++v)
        if (en.child(f, v, c)) next.push_back(c);
    }
    frames.swap(next);
    if (!expanded || frames.empty()) break;
  }

  std::vector<std::vector<Cubillage>> results(frames.size());
  parallel_for(static_cast<int>(frames.size()), opts.threads, [&](int i) {
    Enumerator worker(u, cls, budget);
    EnumFrame f = frames[i];
    worker.dfs(f, results[i]);
  });

  std::vector<Cubillage> out;
  for (auto& r : results)
    for (auto& q : r) out.push_back(std::move(q));
  std::sort(out.begin(), out.end(), canonical_less);
  for (size_t i = 1; i < out.size(); ++i)
    if (out[i] == out[i - 1]) throw InternalCheckFailed("enumeration produced a duplicate");
  return out;
}

namespace {

std::vector<Cubillage> neighbors(const Cubillage& q, GeneratorKind gen, bool fragment_check) {
  std::vector<Cubillage> out;
  if (gen == GeneratorKind::TypeA) {
    for (ColorSet f : raising_flips_A(q)) out.push_back(apply_flip_A(q, f, FlipDir::Raise));
    for (ColorSet f : lowering_flips_A(q)) out.push_back(apply_flip_A(q, f, FlipDir::Lower));
  } else {
    for (const SymFlip& f : symmetric_raising_flips(q, fragment_check))
      out.push_back(apply_sym_flip(q, f, FlipDir::Raise, fragment_check));
    for (const SymFlip& f : symmetric_lowering_flips(q, fragment_check))
      out.push_back(apply_sym_flip(q, f, FlipDir::Lower, fragment_check));
  }
  return out;
}

}  // namespace

std::vector<Cubillage> bfs_closure(const Cubillage& start, GeneratorKind gen, SearchOptions opts) {
  Budget budget(opts.budget);
  std::map<std::vector<uint64_t>, Cubillage> seen;
  std::deque<Cubillage> frontier;
  seen.emplace(canonical_key(start), start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    Cubillage q = std::move(frontier.front());
    frontier.pop_front();
    budget.charge();
    for (Cubillage& nb : neighbors(q, gen, opts.fragment_check)) {
      auto key = canonical_key(nb);
      if (seen.count(key)) continue;
      seen.emplace(std::move(key), nb);
      frontier.push_back(std::move(nb));
    }
  }
  std::vector<Cubillage> out;
  out.reserve(seen.size());
  for (auto& [key, q] : seen) out.push_back(std::move(q));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int FlipDigraph::index_of(const Cubillage& q) const {
  auto it = index_.find(canonical_key(q));
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FlipDigraph::sources() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (in_edges[i].empty()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> FlipDigraph::sinks() const {
  std::vector<int> out;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (out_edges[i].empty()) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<ColorSet> FlipDigraph::added_packets(int edge) const {
  const auto& e = edges[edge];
  std::vector<ColorSet> out;
  for (ColorSet f : nodes[e.dst].inv().members)
    if (!nodes[e.src].contains(f)) out.push_back(f);
  return out;
}

FlipDigraph build_digraph(std::vector<Cubillage> nodes, GeneratorKind gen, SearchOptions opts) {
  FlipDigraph g;
  if (nodes.empty()) throw InvalidInput("build_digraph: empty node set");
  g.n = nodes.front().n();
  g.d = nodes.front().d();
  g.generator = gen;
  std::sort(nodes.begin(), nodes.end(), canonical_less);
  g.nodes = std::move(nodes);
  for (size_t i = 0; i < g.nodes.size(); ++i)
    g.index_.emplace(canonical_key(g.nodes[i]), static_cast<int>(i));

  const int count = static_cast<int>(g.nodes.size());
  std::vector<std::vector<FlipEdge>> per_node(count);
  parallel_for(count, opts.threads, [&](int i) {
    const Cubillage& q = g.nodes[i];
    if (gen == GeneratorKind::TypeA) {
      for (ColorSet f : raising_flips_A(q)) {
        Cubillage dst = apply_flip_A(q, f, FlipDir::Raise);
        int j = g.index_of(dst);
        if (j < 0) throw InternalCheckFailed("node set not closed under type-A raising flips");
        per_node[i].push_back({i, j, FlipKind::TypeA});
      }
    } else {
      for (const SymFlip& f : symmetric_raising_flips(q, opts.fragment_check)) {
        Cubillage dst = apply_sym_flip(q, f, FlipDir::Raise, opts.fragment_check);
        int j = g.index_of(dst);
        if (j < 0) throw InternalCheckFailed("node set not closed under symmetric raising flips");
        per_node[i].push_back({i, j, f.kind});
      }
    }
  });

  g.out_edges.assign(count, {});
  g.in_edges.assign(count, {});
  for (int i = 0; i < count; ++i) {
    for (const FlipEdge& e : per_node[i]) {
      size_t delta = g.nodes[e.dst].rank() - g.nodes[e.src].rank();
      if (delta != static_cast<size_t>(flip_rank_delta(e.kind, g.d)))
        throw InternalCheckFailed("edge rank delta does not match its kind");
      int id = static_cast<int>(g.edges.size());
      g.edges.push_back(e);
      g.out_edges[e.src].push_back(id);
      g.in_edges[e.dst].push_back(id);
    }
  }
  return g;
}

FlipDigraph build_class_digraph(int n, int d, EnumClass cls, SearchOptions opts) {
  if (cls == EnumClass::Skew)
    throw InvalidInput("build_class_digraph: no flip digraph is defined on the skew class");
  auto nodes = enumerate_cubillages(n, d, cls, opts);
  GeneratorKind gen = cls == EnumClass::All ? GeneratorKind::TypeA : GeneratorKind::Symmetric;
  return build_digraph(std::move(nodes), gen, opts);
}

namespace {

bool walk_chains(const FlipDigraph& g, int node, Chain& path, ChainList& out, uint64_t limit) {
  if (g.out_edges[node].empty()) {
    if (out.chains.size() >= limit) {
      out.truncated = true;
      return false;
    }
    out.chains.push_back(path);
    return true;
  }
  for (int e : g.out_edges[node]) {
    path.edges.push_back(e);
    bool keep = walk_chains(g, g.edges[e].dst, path, out, limit);
    path.edges.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace

ChainList maximal_chains(const FlipDigraph& g, uint64_t limit) {
  ChainList out;
  Chain path;
  for (int s : g.sources())
    if (!walk_chains(g, s, path, out, limit)) break;
  return out;
}

bool reachable(const FlipDigraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(g.nodes.size()) || v >= static_cast<int>(g.nodes.size()))
    throw InvalidInput("reachable: node index out of range");
  if (u == v) return true;
  std::vector<uint8_t> seen(g.nodes.size(), 0);
  std::deque<int> todo{u};
  seen[u] = 1;
  while (!todo.empty()) {
    int x = todo.front();
    todo.pop_front();
    for (int e : g.out_edges[x]) {
      int y = g.edges[e].dst;
      if (y == v) return true;
      if (!seen[y]) {
        seen[y] = 1;
        todo.push_back(y);
      }
    }
  }
  return false;
}

}  // namespace zonocube
