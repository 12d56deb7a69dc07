#pragma once

#include <vector>

#include "lmc/types.h"

namespace lmc {

class Graph;
class Hypergraph;

struct Bipartition {
  std::vector<BlockID> block;
  double epsilon = 0.0;
  Weight cut_value = 0;

  [[nodiscard]] NodeID size() const { return static_cast<NodeID>(block.size()); }
  [[nodiscard]] NodeID count(BlockID b) const;
  [[nodiscard]] bool both_blocks_nonempty() const { return count(0) > 0 && count(1) > 0; }
};

// Total weight of edges whose endpoints lie in different blocks.
[[nodiscard]] Weight edge_cut(const Graph &g, const Bipartition &p);

// Total weight of nets with pins in both blocks.
[[nodiscard]] Weight cut_net(const Hypergraph &h, const Bipartition &p);

// L_max = (1 + epsilon) * ceil(total / 2), rounded down to an integer bound.
[[nodiscard]] Weight max_block_weight(Weight total, double epsilon);

// Block weights under unit node weights (the partitioning view).
[[nodiscard]] bool is_balanced_unweighted(const Bipartition &p, double epsilon);

} // namespace lmc
