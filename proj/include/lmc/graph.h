#pragma once

#include <span>
#include <utility>
#include <vector>

#include "lmc/types.h"

namespace lmc {

// Undirected graph in compressed adjacency form. Neighbor lists are sorted,
// symmetric and free of self-loops and parallel edges. Immutable after
// construction.
class Graph {
public:
  Graph() = default;

  // Takes ownership of a CSR representation. Validates all invariants and
  // throws std::invalid_argument on violation.
  Graph(std::vector<EdgeID> offsets, std::vector<NodeID> adjacency, std::vector<Weight> edge_weights,
        std::vector<Weight> node_weights);

  [[nodiscard]] NodeID n() const { return static_cast<NodeID>(_node_weights.size()); }
  [[nodiscard]] EdgeID m() const { return _adjacency.size() / 2; }

  [[nodiscard]] std::span<const NodeID> neighbors(NodeID u) const {
    return {_adjacency.data() + _offsets[u], _adjacency.data() + _offsets[u + 1]};
  }
  [[nodiscard]] std::span<const Weight> incident_weights(NodeID u) const {
    return {_edge_weights.data() + _offsets[u], _edge_weights.data() + _offsets[u + 1]};
  }
  [[nodiscard]] NodeID degree(NodeID u) const {
    return static_cast<NodeID>(_offsets[u + 1] - _offsets[u]);
  }
  [[nodiscard]] Weight weighted_degree(NodeID u) const;
  [[nodiscard]] Weight node_weight(NodeID u) const { return _node_weights[u]; }
  [[nodiscard]] Weight total_node_weight() const;
  [[nodiscard]] Weight total_edge_weight() const;

  [[nodiscard]] bool has_edge(NodeID u, NodeID v) const;
  // Returns 0 when the edge does not exist.
  [[nodiscard]] Weight edge_weight(NodeID u, NodeID v) const;

  [[nodiscard]] const std::vector<EdgeID> &raw_offsets() const { return _offsets; }
  [[nodiscard]] const std::vector<NodeID> &raw_adjacency() const { return _adjacency; }
  [[nodiscard]] const std::vector<Weight> &raw_edge_weights() const { return _edge_weights; }
  [[nodiscard]] const std::vector<Weight> &raw_node_weights() const { return _node_weights; }

  // Labels of the nodes in the source file, when the file used sparse or
  // 1-based identifiers. Empty when node IDs are the file's IDs.
  [[nodiscard]] const std::vector<std::uint64_t> &original_ids() const { return _original_ids; }
  void set_original_ids(std::vector<std::uint64_t> ids);
  [[nodiscard]] std::uint64_t original_id(NodeID u) const {
    return _original_ids.empty() ? u : _original_ids[u];
  }

private:
  std::vector<EdgeID> _offsets{0};
  std::vector<NodeID> _adjacency;
  std::vector<Weight> _edge_weights;
  std::vector<Weight> _node_weights;
  std::vector<std::uint64_t> _original_ids;
};

enum class ParallelEdges {
  keep_first, // duplicates are dropped; used when reading files
  sum,        // weights of duplicates are summed; used for model contraction
};

// Accumulates undirected edges and produces a Graph. Self-loops are dropped.
class GraphBuilder {
public:
  explicit GraphBuilder(NodeID n, Weight default_node_weight = 1);

  void add_edge(NodeID u, NodeID v, Weight w = 1);
  void set_node_weight(NodeID u, Weight w) { _node_weights[u] = w; }

  [[nodiscard]] NodeID n() const { return static_cast<NodeID>(_node_weights.size()); }

  [[nodiscard]] Graph build(ParallelEdges policy = ParallelEdges::keep_first) &&;

private:
  struct Entry {
    NodeID u;
    NodeID v;
    Weight w;
  };
  std::vector<Entry> _entries;
  std::vector<Weight> _node_weights;
};

} // namespace lmc
