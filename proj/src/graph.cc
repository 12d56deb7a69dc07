#include "lmc/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lmc {

Graph::Graph(std::vector<EdgeID> offsets, std::vector<NodeID> adjacency,
             std::vector<Weight> edge_weights, std::vector<Weight> node_weights)
    : _offsets(std::move(offsets)),
      _adjacency(std::move(adjacency)),
      _edge_weights(std::move(edge_weights)),
      _node_weights(std::move(node_weights)) {
  const std::size_t n = _node_weights.size();
  if (_offsets.size() != n + 1 || _offsets.front() != 0 || _offsets.back() != _adjacency.size()) {
    throw std::invalid_argument("graph: offsets do not match adjacency");
  }
  if (_edge_weights.size() != _adjacency.size()) {
    throw std::invalid_argument("graph: edge weight count does not match adjacency");
  }
  if (_adjacency.size() % 2 != 0) {
    throw std::invalid_argument("graph: adjacency length must be even");
  }
  for (NodeID u = 0; u < n; ++u) {
    if (_offsets[u] > _offsets[u + 1]) {
      throw std::invalid_argument("graph: offsets not monotone");
    }
    if (_node_weights[u] < 0) {
      throw std::invalid_argument("graph: negative node weight");
    }
    const auto nbrs = neighbors(u);
    const auto weights = incident_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeID v = nbrs[i];
      if (v >= n) {
        throw std::invalid_argument("graph: neighbor out of range");
      }
      if (v == u) {
        throw std::invalid_argument("graph: self-loop at node " + std::to_string(u));
      }
      if (i > 0 && nbrs[i - 1] >= v) {
        throw std::invalid_argument("graph: neighbor list of " + std::to_string(u) +
                                    " not strictly sorted");
      }
      if (weights[i] <= 0) {
        throw std::invalid_argument("graph: non-positive edge weight");
      }
    }
  }
  // symmetry, including matching weights
  for (NodeID u = 0; u < n; ++u) {
    const auto nbrs = neighbors(u);
    const auto weights = incident_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (edge_weight(nbrs[i], u) != weights[i]) {
        throw std::invalid_argument("graph: adjacency not symmetric");
      }
    }
  }
}

Weight Graph::weighted_degree(NodeID u) const {
  const auto w = incident_weights(u);
  return std::accumulate(w.begin(), w.end(), Weight{0});
}

Weight Graph::total_node_weight() const {
  return std::accumulate(_node_weights.begin(), _node_weights.end(), Weight{0});
}

Weight Graph::total_edge_weight() const {
  return std::accumulate(_edge_weights.begin(), _edge_weights.end(), Weight{0}) / 2;
}

bool Graph::has_edge(NodeID u, NodeID v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Weight Graph::edge_weight(NodeID u, NodeID v) const {
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) {
    return 0;
  }
  return incident_weights(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

void Graph::set_original_ids(std::vector<std::uint64_t> ids) {
  if (!ids.empty() && ids.size() != n()) {
    throw std::invalid_argument("graph: original id map has wrong length");
  }
  _original_ids = std::move(ids);
}

GraphBuilder::GraphBuilder(NodeID n, Weight default_node_weight)
    : _node_weights(n, default_node_weight) {}

void GraphBuilder::add_edge(NodeID u, NodeID v, Weight w) {
  if (u >= n() || v >= n()) {
    throw std::invalid_argument("graph builder: endpoint out of range");
  }
  if (w <= 0) {
    throw std::invalid_argument("graph builder: non-positive edge weight");
  }
  if (u == v) {
    return;
  }
  _entries.push_back({u, v, w});
  _entries.push_back({v, u, w});
}

Graph GraphBuilder::build(ParallelEdges policy) && {
  const NodeID n = this->n();
  std::sort(_entries.begin(), _entries.end(), [](const Entry &a, const Entry &b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  std::vector<EdgeID> offsets(n + 1, 0);
  std::vector<NodeID> adjacency;
  std::vector<Weight> weights;
  adjacency.reserve(_entries.size());
  weights.reserve(_entries.size());

  for (std::size_t i = 0; i < _entries.size();) {
    std::size_t j = i;
    Weight w = 0;
    while (j < _entries.size() && _entries[j].u == _entries[i].u && _entries[j].v == _entries[i].v) {
      if (policy == ParallelEdges::sum || j == i) {
        w += _entries[j].w;
      }
      ++j;
    }
    adjacency.push_back(_entries[i].v);
    weights.push_back(w);
    ++offsets[_entries[i].u + 1];
    i = j;
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  _entries.clear();
  _entries.shrink_to_fit();

  return Graph(std::move(offsets), std::move(adjacency), std::move(weights),
               std::move(_node_weights));
}

} // namespace lmc
