#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lmc/ball.h"
#include "lmc/bipartition.h"
#include "lmc/graph.h"
#include "lmc/hypergraph.h"
#include "lmc/motif.h"

namespace lmc {

enum class ModelKind { graph, hypergraph };

[[nodiscard]] ModelKind parse_model_kind(const std::string &name);
[[nodiscard]] const char *to_string(ModelKind kind);

// Local model of the motif distribution around a seed. Nodes 0..|S|-1 are the
// ball members (same order as Ball::members, so the seed is node 0); node |S|
// is t, the contraction of everything outside S.
//
// Node weights of the stored (hyper)graph are the true weights, with t
// carrying c(S̄). The partitioner treats all nodes as unit weight.
struct MotifModel {
  ModelKind kind = ModelKind::graph;
  Graph graph;           // kind == graph: edge weight = motif co-occurrences
  Hypergraph hypergraph; // kind == hypergraph: one net per projected pin set
  NodeID seed_local = 0;
  NodeID t_local = 0;
  Weight node_weight_t = 0;
  std::vector<NodeID> to_global;
  // Volume of S in the model's own degree basis (weighted degree for the
  // graph model, weighted net degree for the hypergraph model).
  Weight total_volume_S = 0;
  std::size_t num_motifs = 0;

  [[nodiscard]] NodeID n() const { return t_local + 1; }
  [[nodiscard]] bool has_motifs() const { return num_motifs > 0; }
  // Degree of v in the model's basis.
  [[nodiscard]] Weight volume(NodeID v) const;
};

[[nodiscard]] MotifModel build_graph_model(const Graph &g, const Ball &ball, const MotifCollection &mc);
[[nodiscard]] MotifModel build_hypergraph_model(const Graph &g, const Ball &ball,
                                                const MotifCollection &mc);
[[nodiscard]] MotifModel build_model(ModelKind kind, const Graph &g, const Ball &ball,
                                     const MotifCollection &mc);

struct MotifConductance {
  double value = 1.0;
  Weight cut = 0;
  Weight volume = 0;
  // Cluster volume is zero; value is the sentinel 1.0.
  bool degenerate = true;

  // Strictly smaller conductance; degenerate values compare as 1.0.
  [[nodiscard]] bool better_than(const MotifConductance &other) const;
};

// cut / volume(C) where C is the block of the seed. Requires a consistent
// bipartition (seed and t in different blocks); throws std::invalid_argument
// otherwise.
[[nodiscard]] MotifConductance eval_motif_conductance(const MotifModel &model, const Bipartition &p);

// Nodes of the seed's block other than t, as global IDs.
[[nodiscard]] std::vector<NodeID> cluster_members(const MotifModel &model, const Bipartition &p);

// Checks d_mu(S) <= d_mu(complement of S) by enumerating all triangles of g.
// Global work; meant for audits and tests.
[[nodiscard]] bool volume_assumption_holds(const Graph &g, const Ball &ball);

// METIS for the graph kind, hMETIS for the hypergraph kind.
void write_model(const MotifModel &model, std::ostream &out);

} // namespace lmc
