#pragma once

#include <cstdint>
#include <map>

#include "zonocube/flips.hpp"

namespace zonocube {

enum class EnumClass : uint8_t { All, Symmetric, Skew };
enum class GeneratorKind : uint8_t { TypeA, Symmetric };

const char* enum_class_name(EnumClass c);

struct SearchOptions {
  int threads = 1;
  uint64_t budget = default_budget();
  bool fragment_check = true;  // barrel criterion used by symmetric generators
};

// All bi-convex inversion systems of the requested class, by backtracking
// over the packets in lex order with per-stick interval pruning (symmetric
// and skew classes force whole involution orbits at once). Canonical output
// order: rank, then lex.
std::vector<Cubillage> enumerate_cubillages(int n, int d, EnumClass cls, SearchOptions opts = {});

// Closure of `start` under raising and lowering flips of the generator.
// Canonical output order.
std::vector<Cubillage> bfs_closure(const Cubillage& start, GeneratorKind gen,
                                   SearchOptions opts = {});

struct FlipEdge {
  int src = 0;
  int dst = 0;
  FlipKind kind = FlipKind::TypeA;
};

// Nodes in canonical order plus all raising-flip arrows between them. Acyclic
// and ranked: every arrow raises the rank by its kind's delta.
struct FlipDigraph {
  int n = 0, d = 0;
  GeneratorKind generator = GeneratorKind::TypeA;
  std::vector<Cubillage> nodes;
  std::vector<FlipEdge> edges;
  std::vector<std::vector<int>> out_edges;  // per node, edge indices, canonical order
  std::vector<std::vector<int>> in_edges;

  int index_of(const Cubillage& q) const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
  // Inversions added along an edge (lex order).
  std::vector<ColorSet> added_packets(int edge) const;

private:
  friend FlipDigraph build_digraph(std::vector<Cubillage>, GeneratorKind, SearchOptions);
  std::map<std::vector<uint64_t>, int> index_;
};

// `nodes` must be closed under the generator's raising flips.
FlipDigraph build_digraph(std::vector<Cubillage> nodes, GeneratorKind gen, SearchOptions opts = {});

// Convenience: enumerate + build. class All pairs with the type-A generator,
// Symmetric with the symmetric one.
FlipDigraph build_class_digraph(int n, int d, EnumClass cls, SearchOptions opts = {});

struct Chain {
  std::vector<int> edges;  // consecutive edge indices, source to sink
};

struct ChainList {
  std::vector<Chain> chains;
  bool truncated = false;
};

// All directed source-to-sink paths, in DFS order over canonical adjacency;
// stops with truncated=true once `limit` chains are collected.
ChainList maximal_chains(const FlipDigraph& g, uint64_t limit = 1'000'000);

// Path existence u -> v (reflexive).
bool reachable(const FlipDigraph& g, int u, int v);

}  // namespace zonocube
