#pragma once

#include <span>
#include <vector>

#include "lmc/types.h"

namespace lmc {

class Graph;

// Undirected hypergraph. Nets are stored as sorted, duplicate-free pin lists
// of size >= 2 with positive weight; the node-to-net incidence is kept
// alongside. Immutable after construction.
class Hypergraph {
public:
  Hypergraph() = default;

  [[nodiscard]] NodeID n() const { return static_cast<NodeID>(_node_weights.size()); }
  [[nodiscard]] NetID num_nets() const { return static_cast<NetID>(_net_weights.size()); }
  [[nodiscard]] std::size_t num_pins() const { return _pins.size(); }

  [[nodiscard]] std::span<const NodeID> pins(NetID e) const {
    return {_pins.data() + _net_offsets[e], _pins.data() + _net_offsets[e + 1]};
  }
  [[nodiscard]] std::size_t net_size(NetID e) const { return _net_offsets[e + 1] - _net_offsets[e]; }
  [[nodiscard]] Weight net_weight(NetID e) const { return _net_weights[e]; }

  [[nodiscard]] std::span<const NetID> incident_nets(NodeID u) const {
    return {_incidence.data() + _node_offsets[u], _incidence.data() + _node_offsets[u + 1]};
  }
  [[nodiscard]] Weight node_weight(NodeID u) const { return _node_weights[u]; }
  [[nodiscard]] Weight total_node_weight() const;

  // Sum of the weights of the nets containing u.
  [[nodiscard]] Weight weighted_net_degree(NodeID u) const;

private:
  friend class HypergraphBuilder;

  std::vector<std::size_t> _net_offsets{0};
  std::vector<NodeID> _pins;
  std::vector<Weight> _net_weights;
  std::vector<std::size_t> _node_offsets{0};
  std::vector<NetID> _incidence;
  std::vector<Weight> _node_weights;
};

class HypergraphBuilder {
public:
  explicit HypergraphBuilder(NodeID n, Weight default_node_weight = 1);

  // Pins are deduplicated; nets left with fewer than two pins are dropped.
  // Throws std::invalid_argument for out-of-range pins or non-positive weight.
  void add_net(std::span<const NodeID> pins, Weight w = 1);
  void set_node_weight(NodeID u, Weight w) { _node_weights[u] = w; }

  // With merge_parallel, nets with identical pin sets become one net whose
  // weight is the sum of their weights.
  [[nodiscard]] Hypergraph build(bool merge_parallel = true) &&;

private:
  std::vector<std::size_t> _net_offsets{0};
  std::vector<NodeID> _pins;
  std::vector<Weight> _net_weights;
  std::vector<Weight> _node_weights;
};

// Each edge becomes a 2-pin net of the same weight; node weights are copied.
[[nodiscard]] Hypergraph to_hypergraph(const Graph &g);

} // namespace lmc
