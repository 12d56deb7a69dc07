#pragma once

#include <cstdint>

#include "lmc/bipartition.h"
#include "lmc/model.h"

namespace lmc {

struct LabelPropagationConfig {
  unsigned max_rounds = 3;
  std::uint64_t rng_seed = 0;
  // When nonzero, the incrementally maintained cut and volume are compared
  // against a from-scratch recomputation after every this many moves;
  // a mismatch throws std::logic_error.
  unsigned audit_every = 0;
};

struct LabelPropagationStats {
  unsigned rounds = 0;
  std::size_t strict_moves = 0;
  std::size_t zero_gain_moves = 0;
  // The last round changed neither cut nor volume, so no single move of a
  // node other than the seed and t lowers the motif conductance.
  bool converged = false;
};

// Label propagation on the graph model that directly minimizes
// cut / d_w(C), C being the seed's block. Rounds visit all nodes except the
// seed and t in a fresh random order; a node switches blocks if that strictly
// lowers the conductance, or leaves it unchanged and a fair coin says so.
// Requires a consistent bipartition of a graph-kind model.
[[nodiscard]] Bipartition label_prop_refine(const MotifModel &model, Bipartition p,
                                            const LabelPropagationConfig &cfg,
                                            LabelPropagationStats *stats = nullptr);

} // namespace lmc
