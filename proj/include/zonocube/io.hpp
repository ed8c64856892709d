#pragma once

#include <string>

#include "zonocube/digraph.hpp"
#include "zonocube/geometry.hpp"

namespace zonocube {

enum class LabelMode : uint8_t { Natural, Symmetric };

// Signed color labels: the natural colors 1..n map order-preservingly onto
// -m..-1,1..m (n = 2m) or -m..0..m (n = 2m+1).
int to_symmetric_label(int color, int n);
int from_symmetric_label(int label, int n);

// Canonical cubillage document. Equal cubillages emit identical bytes:
//   {"n":5,"d":2,"inversions":[[2,3,4]]}
// With LabelMode::Symmetric a "label_mode" field is appended and the colors
// are written as signed labels.
std::string emit_cubillage(const Cubillage& q, LabelMode mode = LabelMode::Natural);

struct ParsedCubillage {
  Cubillage cubillage;
  LabelMode mode;
};

// Parses and validates a cubillage document; malformed input raises
// InvalidInput with a position diagnostic.
ParsedCubillage parse_cubillage(const std::string& text);

// Canonical digraph document:
//   {"n":..,"d":..,"class":"..","nodes":[{"id":..,"rank":..,"inversions":[..]}..],
//    "edges":[{"src":..,"dst":..,"kind":".."}..]}
std::string emit_digraph(const FlipDigraph& g, const std::string& cls);

struct DigraphDocument {
  int n = 0, d = 0;
  std::string cls;
  struct Node {
    int id = 0;
    int rank = 0;
    std::vector<std::vector<int>> inversions;
  };
  struct Edge {
    int src = 0, dst = 0;
    std::string kind;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
};

DigraphDocument parse_digraph(const std::string& text);

// Graphviz rendering; arrow styling by kind: solid for simple/typeA arrows,
// a doubled line for double arrows, bold for barrel arrows.
std::string digraph_to_dot(const DigraphDocument& doc);

// Rhombus picture of a d=2 cubillage in the given frame, exact vertex
// coordinates scaled onto the page.
std::string cubillage_to_svg(const Cubillage& q, const Frame& f);

// One-line count summary table.
std::string counts_csv(const std::vector<std::tuple<int, int, std::string, uint64_t>>& rows);

}  // namespace zonocube
