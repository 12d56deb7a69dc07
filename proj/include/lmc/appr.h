#pragma once

#include <span>
#include <vector>

#include "lmc/cluster.h"
#include "lmc/graph.h"

namespace lmc {

// Global weighted motif graph: an edge joins two nodes iff they share a
// triangle, weighted by the number of triangles containing both.
struct WeightedMotifGraph {
  Graph graph;
  std::vector<Weight> degree;
  std::size_t triangles = 0;

  [[nodiscard]] Weight total_volume() const { return 6 * static_cast<Weight>(triangles); }
};

[[nodiscard]] WeightedMotifGraph build_W(const Graph &g);

struct MotifConductanceValue {
  double value = 1.0;
  Weight cut = 0;
  Weight denominator = 0;
  bool degenerate = true;
};

// Exact motif conductance |M'| / min(d_mu(C), d_mu(complement)) evaluated as
// the conductance of C in W.
[[nodiscard]] MotifConductanceValue global_motif_conductance(const WeightedMotifGraph &w,
                                                             std::span<const NodeID> cluster);

struct ApprConfig {
  // Probability of continuing the walk along an edge.
  double teleport_alpha = 0.98;
  // Pushes continue while some residual r(v) >= eps * d_W(v).
  double eps = 1e-4;
};

struct PprVector {
  std::vector<std::pair<NodeID, double>> p;
  std::vector<std::pair<NodeID, double>> residual;
  std::size_t pushes = 0;
};

// Approximate personalized PageRank by residual pushes.
[[nodiscard]] PprVector approximate_ppr(const WeightedMotifGraph &w, NodeID u, const ApprConfig &cfg);

// APPR push followed by a sweep over the support of p in decreasing
// p(v) / d_W(v) order, returning the prefix of smallest conductance in W.
// Seeds with no triangle produce a degenerate result.
[[nodiscard]] ClusterResult appr_sweep(const WeightedMotifGraph &w, NodeID u, const ApprConfig &cfg = {});

} // namespace lmc
