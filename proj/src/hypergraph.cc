#include "lmc/hypergraph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "lmc/graph.h"

namespace lmc {

Weight Hypergraph::total_node_weight() const {
  return std::accumulate(_node_weights.begin(), _node_weights.end(), Weight{0});
}

Weight Hypergraph::weighted_net_degree(NodeID u) const {
  Weight sum = 0;
  for (const NetID e : incident_nets(u)) {
    sum += _net_weights[e];
  }
  return sum;
}

HypergraphBuilder::HypergraphBuilder(NodeID n, Weight default_node_weight)
    : _node_weights(n, default_node_weight) {}

void HypergraphBuilder::add_net(std::span<const NodeID> pins, Weight w) {
  if (w <= 0) {
    throw std::invalid_argument("hypergraph builder: non-positive net weight");
  }
  const std::size_t begin = _pins.size();
  for (const NodeID p : pins) {
    if (p >= _node_weights.size()) {
      throw std::invalid_argument("hypergraph builder: pin out of range");
    }
    _pins.push_back(p);
  }
  std::sort(_pins.begin() + static_cast<std::ptrdiff_t>(begin), _pins.end());
  _pins.erase(std::unique(_pins.begin() + static_cast<std::ptrdiff_t>(begin), _pins.end()),
              _pins.end());
  if (_pins.size() - begin < 2) {
    _pins.resize(begin);
    return;
  }
  _net_offsets.push_back(_pins.size());
  _net_weights.push_back(w);
}

namespace {
struct PinSpanHash {
  const std::vector<NodeID> *pins;
  const std::vector<std::size_t> *offsets;

  std::size_t operator()(NetID e) const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (std::size_t i = (*offsets)[e]; i < (*offsets)[e + 1]; ++i) {
      h = (h ^ (*pins)[i]) * 0x100000001b3ULL;
    }
    return h;
  }
};

struct PinSpanEqual {
  const std::vector<NodeID> *pins;
  const std::vector<std::size_t> *offsets;

  bool operator()(NetID a, NetID b) const {
    const auto a0 = pins->begin() + static_cast<std::ptrdiff_t>((*offsets)[a]);
    const auto a1 = pins->begin() + static_cast<std::ptrdiff_t>((*offsets)[a + 1]);
    const auto b0 = pins->begin() + static_cast<std::ptrdiff_t>((*offsets)[b]);
    const auto b1 = pins->begin() + static_cast<std::ptrdiff_t>((*offsets)[b + 1]);
    return std::equal(a0, a1, b0, b1);
  }
};
} // namespace

Hypergraph HypergraphBuilder::build(bool merge_parallel) && {
  Hypergraph h;
  const NetID num_raw = static_cast<NetID>(_net_weights.size());

  if (merge_parallel) {
    std::unordered_map<NetID, NetID, PinSpanHash, PinSpanEqual> representative(
        num_raw, PinSpanHash{&_pins, &_net_offsets}, PinSpanEqual{&_pins, &_net_offsets});
    for (NetID e = 0; e < num_raw; ++e) {
      const auto [it, inserted] = representative.try_emplace(e, h.num_nets());
      if (inserted) {
        h._pins.insert(h._pins.end(), _pins.begin() + static_cast<std::ptrdiff_t>(_net_offsets[e]),
                       _pins.begin() + static_cast<std::ptrdiff_t>(_net_offsets[e + 1]));
        h._net_offsets.push_back(h._pins.size());
        h._net_weights.push_back(_net_weights[e]);
      } else {
        h._net_weights[it->second] += _net_weights[e];
      }
    }
  } else {
    h._pins = std::move(_pins);
    h._net_offsets = std::move(_net_offsets);
    h._net_weights = std::move(_net_weights);
  }
  h._node_weights = std::move(_node_weights);

  const NodeID n = h.n();
  h._node_offsets.assign(n + 1, 0);
  for (const NodeID p : h._pins) {
    ++h._node_offsets[p + 1];
  }
  std::partial_sum(h._node_offsets.begin(), h._node_offsets.end(), h._node_offsets.begin());
  h._incidence.resize(h._pins.size());
  std::vector<std::size_t> fill(h._node_offsets.begin(), h._node_offsets.end() - 1);
  for (NetID e = 0; e < h.num_nets(); ++e) {
    for (const NodeID p : h.pins(e)) {
      h._incidence[fill[p]++] = e;
    }
  }
  return h;
}

Hypergraph to_hypergraph(const Graph &g) {
  HypergraphBuilder builder(g.n());
  for (NodeID u = 0; u < g.n(); ++u) {
    builder.set_node_weight(u, g.node_weight(u));
    const auto nbrs = g.neighbors(u);
    const auto weights = g.incident_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i]) {
        const NodeID pins[2] = {u, nbrs[i]};
        builder.add_net(pins, weights[i]);
      }
    }
  }
  return std::move(builder).build(false);
}

} // namespace lmc
