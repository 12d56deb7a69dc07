#pragma once

#include <cstdint>
#include <vector>

#include "lmc/graph.h"
#include "lmc/model.h"

namespace lmc {

struct ClusterConfig {
  // Ball repetitions; repetition i (1-based) uses first_layers + i - 1 BFS
  // levels, and the last one grows to at least min_ball_size nodes.
  unsigned reps_alpha = 3;
  // Partitionings per ball.
  unsigned beta = 80;
  ModelKind model_kind = ModelKind::graph;
  double epsilon_lo = 0.05;
  double epsilon_hi = 0.90;
  unsigned lp_max_rounds = 3;
  double time_limit_s = 3600.0;
  std::uint64_t rng_seed = 0;
  unsigned first_layers = 1;
  NodeID min_ball_size = 100;

  // Throws std::invalid_argument unless reps_alpha >= 1, beta >= 1 and
  // 0 < epsilon_lo <= epsilon_hi.
  void validate() const;
};

struct PhaseTimings {
  double ball_ms = 0.0;
  double enumeration_ms = 0.0;
  double model_ms = 0.0;
  double partition_ms = 0.0;
  double local_search_ms = 0.0;

  [[nodiscard]] double total_ms() const {
    return ball_ms + enumeration_ms + model_ms + partition_ms + local_search_ms;
  }
};

struct BallSummary {
  unsigned layers = 0;
  NodeID size = 0;
  std::size_t motifs = 0;
};

struct ClusterResult {
  NodeID seed = kInvalidNode;
  // Global IDs, sorted ascending.
  std::vector<NodeID> cluster;
  double phi_mu = 1.0;
  Weight cut = 0;
  Weight volume = 0;
  PhaseTimings timings;
  bool degenerate = true;
  // Whole component returned because the BFS exhausted it.
  bool component_shortcut = false;
  bool time_limit_hit = false;
  std::vector<BallSummary> balls_used;

  [[nodiscard]] std::size_t size() const { return cluster.size(); }
};

// Local motif clustering around seed u: ball growth, triangle enumeration,
// model construction and repeated randomized bipartitioning; keeps the
// consistent cluster of lowest motif conductance (earliest on ties).
[[nodiscard]] ClusterResult local_motif_cluster(const Graph &g, NodeID u, const ClusterConfig &cfg);

} // namespace lmc
