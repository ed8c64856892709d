#include "zonocube/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zonocube {

Cubillage reduce_middle(const Cubillage& q) {
  const int n = q.n();
  if (n % 2 == 0) throw InvalidInput("reduce_middle: needs an odd number of colors");
  if (!q.symmetric()) throw InvalidInput("reduce_middle: cubillage is not symmetric");
  const int middle = (n + 1) / 2;
  InversionSet out(n - 1, q.d());
  for (ColorSet f : q.inv().members) {
    if (f.contains(middle)) continue;
    ColorSet relabeled;
    for (int c : f.elements()) relabeled = relabeled.with(c > middle ? c - 1 : c);
    out.members.insert(relabeled);
  }
  auto v = Cubillage::try_validated(std::move(out));
  if (!v) throw InternalCheckFailed("reduce_middle: restriction is not bi-convex");
  return *v;
}

DigraphMap make_digraph_map(const FlipDigraph& src, const FlipDigraph& dst,
                            const std::function<Cubillage(const Cubillage&)>& f) {
  DigraphMap m;
  m.source = &src;
  m.target = &dst;
  m.node_map.reserve(src.nodes.size());
  for (const Cubillage& q : src.nodes) {
    int j = dst.index_of(f(q));
    if (j < 0)
      throw InvalidInput("digraph map: image of node " + q.to_string() +
                         " is not a target node");
    m.node_map.push_back(j);
  }
  return m;
}

MorphismReport check_digraph_map(const DigraphMap& map) {
  const FlipDigraph& src = *map.source;
  const FlipDigraph& dst = *map.target;
  MorphismReport rep;
  std::ostringstream why;

  std::set<std::pair<int, int>> target_pairs;
  for (const FlipEdge& e : dst.edges) target_pairs.insert({e.src, e.dst});

  rep.arrow_consistent = true;
  std::set<std::pair<int, int>> image_pairs;
  for (const FlipEdge& e : src.edges) {
    int a = map.node_map[e.src], b = map.node_map[e.dst];
    if (a == b) continue;  // loop
    image_pairs.insert({a, b});
    if (!target_pairs.count({a, b}) && rep.arrow_consistent) {
      rep.arrow_consistent = false;
      why << "arrow " << e.src << "->" << e.dst << " maps to the non-arrow " << a << "->" << b
          << "; ";
    }
  }

  std::vector<std::vector<int>> fibers(dst.nodes.size());
  for (size_t i = 0; i < map.node_map.size(); ++i)
    fibers[map.node_map[i]].push_back(static_cast<int>(i));
  rep.surjective = true;
  for (size_t j = 0; j < fibers.size(); ++j) {
    if (fibers[j].empty() && rep.surjective) {
      rep.surjective = false;
      why << "target node " << j << " has empty fiber; ";
    }
  }

  rep.full = true;
  for (const FlipEdge& e : dst.edges) {
    if (!image_pairs.count({e.src, e.dst})) {
      rep.full = false;
      why << "target arrow " << e.src << "->" << e.dst << " has no preimage arrow; ";
      break;
    }
  }

  // Fiber connectivity through invisible edges (equal endpoints' images).
  std::vector<std::vector<int>> adj(src.nodes.size());
  for (const FlipEdge& e : src.edges) {
    if (map.node_map[e.src] == map.node_map[e.dst]) {
      adj[e.src].push_back(e.dst);
      adj[e.dst].push_back(e.src);
    }
  }
  rep.fiber_connected.assign(fibers.size(), 1);
  rep.fibers_connected = true;
  for (size_t j = 0; j < fibers.size(); ++j) {
    const auto& fiber = fibers[j];
    if (fiber.size() <= 1) continue;
    std::set<int> pending(fiber.begin(), fiber.end());
    std::vector<int> stack{fiber.front()};
    pending.erase(fiber.front());
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (pending.erase(y)) stack.push_back(y);
    }
    if (!pending.empty()) {
      rep.fiber_connected[j] = 0;
      if (rep.fibers_connected) {
        rep.fibers_connected = false;
        why << "fiber over target node " << j << " is disconnected; ";
      }
    }
  }

  rep.fibers = std::move(fibers);
  rep.witness = why.str();
  return rep;
}

MorphismReport red_fibers(const FlipDigraph& src, const FlipDigraph& dst) {
  return check_digraph_map(make_digraph_map(src, dst, reduce_middle));
}

Cubillage lift_chain(const FlipDigraph& g, const Chain& chain) {
  const int n = g.n, d = g.d;
  if (d + 1 > n) throw InvalidInput("lift_chain: no packets to time-stamp at d=n");

  int at = chain.edges.empty() ? -1 : g.edges[chain.edges.front()].src;
  if (at < 0) throw LiftInconsistency("lift_chain: empty chain");
  if (g.nodes[at].rank() != 0)
    throw LiftInconsistency("lift_chain: chain does not start at the standard cubillage");

  std::map<ColorSet, int> step;
  int t = 0;
  for (int ei : chain.edges) {
    const FlipEdge& e = g.edges[ei];
    if (e.src != at) throw InvalidInput("lift_chain: edges are not consecutive");
    if (e.kind == FlipKind::Barrel)
      throw BarrelHole("lift_chain: barrel arrow at step " + std::to_string(t + 1) +
                       " leaves a hole in the swept membrane family");
    ++t;
    for (ColorSet f : g.added_packets(ei)) step.emplace(f, t);
    at = e.dst;
  }
  if (g.nodes[at].rank() != binomial(n, d + 1))
    throw LiftInconsistency("lift_chain: chain does not end at the anti-standard cubillage");

  // A double step never lands twice in one stick: the two packets F, F° of a
  // double flip satisfy |F ∪ F°| >= d+3.
  InversionSet lifted(n, d + 1);
  if (d + 2 <= n) {
    for (ColorSet g2 : enumerate_packets(n, d + 2)) {
      auto members = stick_members(g2).members;
      bool increasing = true, decreasing = true;
      for (size_t i = 0; i + 1 < members.size(); ++i) {
        int a = step.at(members[i]);
        int b = step.at(members[i + 1]);
        if (a == b) throw LiftInconsistency("lift_chain: tied steps inside stick " + g2.to_string());
        (a < b ? decreasing : increasing) = false;
      }
      if (!increasing && !decreasing)
        throw LiftInconsistency("lift_chain: non-monotone stick " + g2.to_string());
      if (decreasing && !increasing) lifted.members.insert(g2);
      // a full stick visited in increasing (lex) order stays out
    }
  }
  auto out = Cubillage::try_validated(std::move(lifted));
  if (!out) throw LiftInconsistency("lift_chain: lifted system is not bi-convex");
  return *out;
}

}  // namespace zonocube
