#include "lmc/bipartition.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lmc/graph.h"
#include "lmc/hypergraph.h"

namespace lmc {

NodeID Bipartition::count(BlockID b) const {
  return static_cast<NodeID>(std::count(block.begin(), block.end(), b));
}

Weight edge_cut(const Graph &g, const Bipartition &p) {
  if (p.size() != g.n()) {
    throw std::invalid_argument("edge_cut: partition size does not match graph");
  }
  Weight cut = 0;
  for (NodeID u = 0; u < g.n(); ++u) {
    const auto nbrs = g.neighbors(u);
    const auto weights = g.incident_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i] && p.block[u] != p.block[nbrs[i]]) {
        cut += weights[i];
      }
    }
  }
  return cut;
}

Weight cut_net(const Hypergraph &h, const Bipartition &p) {
  if (p.size() != h.n()) {
    throw std::invalid_argument("cut_net: partition size does not match hypergraph");
  }
  Weight cut = 0;
  for (NetID e = 0; e < h.num_nets(); ++e) {
    const auto pins = h.pins(e);
    const BlockID first = p.block[pins.front()];
    if (std::any_of(pins.begin() + 1, pins.end(), [&](NodeID v) { return p.block[v] != first; })) {
      cut += h.net_weight(e);
    }
  }
  return cut;
}

Weight max_block_weight(Weight total, double epsilon) {
  const Weight half = (total + 1) / 2;
  return static_cast<Weight>(std::floor((1.0 + epsilon) * static_cast<double>(half) + 1e-9));
}

bool is_balanced_unweighted(const Bipartition &p, double epsilon) {
  const Weight limit = max_block_weight(p.size(), epsilon);
  return p.count(0) <= limit && p.count(1) <= limit;
}

} // namespace lmc
