#pragma once

#include <functional>

#include "zonocube/digraph.hpp"
#include "zonocube/placement.hpp"

namespace zonocube {

// Deletes the middle color of a symmetric cubillage with an odd number of
// colors: members avoiding color m+1 survive, colors above m+1 shift down by
// one. The result is a symmetric cubillage on 2m colors.
Cubillage reduce_middle(const Cubillage& q);

// A total node map between two flip digraphs.
struct DigraphMap {
  const FlipDigraph* source = nullptr;
  const FlipDigraph* target = nullptr;
  std::vector<int> node_map;  // source id -> target id
};

// Builds the node map by applying f to every source node and locating the
// image among the target nodes.
DigraphMap make_digraph_map(const FlipDigraph& src, const FlipDigraph& dst,
                            const std::function<Cubillage(const Cubillage&)>& f);

struct MorphismReport {
  bool arrow_consistent = false;  // every source arrow maps to an arrow or a loop
  bool surjective = false;
  bool full = false;              // every target arrow has a preimage arrow
  bool fibers_connected = false;  // via map-invisible edges, directions discarded
  std::vector<std::vector<int>> fibers;        // per target node, sorted source ids
  std::vector<uint8_t> fiber_connected;        // aligned with fibers
  std::string witness;                         // first failure of each property
};

MorphismReport check_digraph_map(const DigraphMap& map);

// The fibers of the middle-color reduction on symmetric digraphs, with
// connectivity via reduction-invisible flips.
MorphismReport red_fibers(const FlipDigraph& src, const FlipDigraph& dst);

// Reads a maximal chain of the digraph as a cubillage one dimension up: each
// packet is time-stamped by the step that added it, and a (d+2)-subset joins
// the lifted inversion set iff its stick was filled in reverse-lex order.
// Throws BarrelHole when the chain uses a barrel arrow, LiftInconsistency
// when the chain is not a standard-to-anti-standard sweep.
Cubillage lift_chain(const FlipDigraph& g, const Chain& chain);

}  // namespace zonocube
