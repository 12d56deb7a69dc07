#include "lmc/ball.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lmc {

Ball grow_ball(const Graph &g, NodeID u, unsigned layers, std::optional<NodeID> min_size) {
  if (u >= g.n()) {
    throw std::out_of_range("grow_ball: seed out of range");
  }
  if (layers < 1) {
    throw std::invalid_argument("grow_ball: need at least one layer");
  }

  Ball ball;
  ball.seed = u;
  ball.members.push_back(u);

  std::unordered_set<NodeID> visited{u};
  std::vector<NodeID> frontier{u};
  std::vector<NodeID> next;

  auto expand = [&] {
    next.clear();
    for (const NodeID v : frontier) {
      for (const NodeID w : g.neighbors(v)) {
        if (visited.insert(w).second) {
          next.push_back(w);
        }
      }
    }
    std::swap(frontier, next);
  };

  // After expand(), frontier holds the next BFS level; it is appended to S
  // only if the level is wanted.
  expand();
  while (!frontier.empty()) {
    const bool within_request = ball.layers < layers;
    const bool grow = !within_request && min_size && ball.members.size() < *min_size;
    if (!within_request && !grow) {
      break;
    }
    ball.members.insert(ball.members.end(), frontier.begin(), frontier.end());
    ++ball.layers;
    expand();
  }
  // frontier is now N(S) \ S.
  ball.frontier_complete = frontier.empty();
  // Exhausted within the request iff at most `layers` levels exist.
  ball.complete_at_requested_depth = ball.frontier_complete && ball.layers <= layers;

  ball.hood = induced_closed_hood(g, ball.members);
  return ball;
}

LocalSubgraph induced_closed_hood(const Graph &g, std::span<const NodeID> members) {
  if (members.empty()) {
    throw std::invalid_argument("induced_closed_hood: empty node set");
  }
  std::unordered_set<NodeID> in_set(members.begin(), members.end());
  std::vector<NodeID> boundary;
  for (const NodeID v : members) {
    for (const NodeID w : g.neighbors(v)) {
      if (in_set.insert(w).second) {
        boundary.push_back(w);
      }
    }
  }
  std::sort(boundary.begin(), boundary.end());

  std::vector<NodeID> nodes(members.begin(), members.end());
  nodes.insert(nodes.end(), boundary.begin(), boundary.end());
  return induce_subgraph(g, nodes);
}

LocalSubgraph induce_subgraph(const Graph &g, std::span<const NodeID> nodes) {
  LocalSubgraph sub;
  sub.to_global.assign(nodes.begin(), nodes.end());
  sub.to_local.reserve(nodes.size());
  for (NodeID i = 0; i < nodes.size(); ++i) {
    if (!sub.to_local.emplace(nodes[i], i).second) {
      throw std::invalid_argument("induce_subgraph: duplicate node");
    }
  }

  const NodeID n = static_cast<NodeID>(nodes.size());
  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> adjacency;
  std::vector<Weight> weights;
  std::vector<Weight> node_weights(n);
  std::vector<std::pair<NodeID, Weight>> row;

  for (NodeID i = 0; i < n; ++i) {
    const NodeID v = nodes[i];
    node_weights[i] = g.node_weight(v);
    row.clear();
    const auto nbrs = g.neighbors(v);
    const auto ws = g.incident_weights(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const auto it = sub.to_local.find(nbrs[k]);
      if (it != sub.to_local.end()) {
        row.emplace_back(it->second, ws[k]);
      }
    }
    std::sort(row.begin(), row.end());
    for (const auto &[w, wt] : row) {
      adjacency.push_back(w);
      weights.push_back(wt);
    }
    offsets[i + 1] = adjacency.size();
  }
  sub.graph = Graph(std::move(offsets), std::move(adjacency), std::move(weights),
                    std::move(node_weights));
  return sub;
}

} // namespace lmc
