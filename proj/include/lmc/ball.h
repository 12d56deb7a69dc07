#pragma once

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lmc/graph.h"

namespace lmc {

// Subgraph of G induced by a node set, with local IDs. Local IDs follow the
// order of the node set handed to induce_subgraph.
struct LocalSubgraph {
  Graph graph;
  std::vector<NodeID> to_global;
  std::unordered_map<NodeID, NodeID> to_local;

  [[nodiscard]] NodeID local(NodeID global) const { return to_local.at(global); }
};

// Node set S around a seed, grown by breadth-first search.
//
// members lists S in BFS order (seed first). hood is the subgraph induced by
// N[S] whose local IDs 0..|S|-1 are the members in the same order, followed by
// the boundary N(S)\S; it therefore contains every edge with an endpoint in S
// as well as the edges between boundary nodes.
struct Ball {
  NodeID seed = kInvalidNode;
  // BFS levels included in S (may exceed the requested count after growth).
  unsigned layers = 0;
  std::vector<NodeID> members;
  LocalSubgraph hood;
  // True iff N(S) = S, i.e. the BFS exhausted the seed's component.
  bool frontier_complete = false;
  // True iff the component was exhausted within the requested layer count,
  // before any minimum-size growth.
  bool complete_at_requested_depth = false;

  [[nodiscard]] NodeID size() const { return static_cast<NodeID>(members.size()); }
  [[nodiscard]] bool in_ball(NodeID local) const { return local < size(); }
};

// BFS levels 0..layers from u. When min_size is set, whole additional levels
// are appended while |S| < min_size and the component is not exhausted.
[[nodiscard]] Ball grow_ball(const Graph &g, NodeID u, unsigned layers,
                             std::optional<NodeID> min_size = std::nullopt);

// Subgraph induced by N[members]. Local IDs: members first (in the given
// order), then the remaining neighbors in increasing global ID.
[[nodiscard]] LocalSubgraph induced_closed_hood(const Graph &g, std::span<const NodeID> members);

// Subgraph induced by exactly the given nodes, local IDs in the given order.
[[nodiscard]] LocalSubgraph induce_subgraph(const Graph &g, std::span<const NodeID> nodes);

} // namespace lmc
