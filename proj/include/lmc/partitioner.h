#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lmc/bipartition.h"
#include "lmc/hypergraph.h"
#include "lmc/model.h"
#include "lmc/random.h"

namespace lmc {

struct PartitionerConfig {
  double epsilon = 0.03;
  // Coarsening stops once the hypergraph has at most this many nodes.
  NodeID coarsening_limit = 60;
  unsigned init_tries = 10;
  unsigned fm_max_passes = 5;
  std::uint64_t rng_seed = 0;

  // Throws std::invalid_argument unless epsilon > 0, coarsening_limit >= 4
  // and init_tries >= 1.
  void validate() const;
};

// Multilevel 2-way partitioning of a model under the unit-node-weight view,
// minimizing edge-cut (graph kind) or cut-net (hypergraph kind) subject to
// c(V_i) <= (1 + epsilon) * ceil(n / 2). Both blocks are nonempty.
[[nodiscard]] Bipartition bipartition(const MotifModel &model, const PartitionerConfig &cfg);

// Same, on an arbitrary hypergraph; node weights of h are used as given.
[[nodiscard]] Bipartition bipartition(const Hypergraph &h, const PartitionerConfig &cfg);

// Places the seed in the block not containing t (only the seed may move) and
// recomputes the cut.
[[nodiscard]] Bipartition enforce_consistency(const MotifModel &model, Bipartition p);
[[nodiscard]] bool is_consistent(const MotifModel &model, const Bipartition &p);

// The model as a hypergraph with unit node weights; graph edges become 2-pin
// nets.
[[nodiscard]] Hypergraph partition_view(const MotifModel &model);

namespace multilevel {

// One contraction step. coarse_of maps every node of the finer level to its
// node in `hypergraph`.
struct CoarseLevel {
  Hypergraph hypergraph;
  std::vector<NodeID> coarse_of;
  unsigned level = 0;
};

// Matches node pairs by heavy pin overlap (sum over shared nets of
// w(e) / (|e| - 1); for 2-pin nets this is heavy-edge matching), visiting
// nodes in random order and breaking rating ties by smaller ID. Pairs whose
// combined weight exceeds max_node_weight are not formed. Parallel nets are
// merged and nets reduced to a single pin are removed.
[[nodiscard]] CoarseLevel coarsen(const Hypergraph &h, Weight max_node_weight, Rng &rng,
                                  unsigned level = 0);

[[nodiscard]] std::vector<BlockID> project(const CoarseLevel &level,
                                           std::span<const BlockID> coarse_blocks);

// Region growing from random start nodes, each try followed by FM; returns
// the best balanced result.
[[nodiscard]] std::vector<BlockID> initial_partition(const Hypergraph &h, Weight max_block,
                                                     unsigned tries, unsigned fm_passes, Rng &rng);

// Boundary FM with node locking and rollback to the best prefix. Moves never
// exceed max_block or empty a block. Returns the resulting cut-net.
Weight fm_refine(const Hypergraph &h, std::vector<BlockID> &blocks, Weight max_block,
                 unsigned max_passes);

} // namespace multilevel

} // namespace lmc
