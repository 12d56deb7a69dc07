#include "lmc/label_propagation.h"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "lmc/partitioner.h"
#include "lmc/random.h"

namespace lmc {

namespace {

// Compares cut_a / vol_a with cut_b / vol_b for positive volumes.
int compare_ratio(Weight cut_a, Weight vol_a, Weight cut_b, Weight vol_b) {
  const __int128 lhs = static_cast<__int128>(cut_a) * vol_b;
  const __int128 rhs = static_cast<__int128>(cut_b) * vol_a;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

} // namespace

Bipartition label_prop_refine(const MotifModel &model, Bipartition p, const LabelPropagationConfig &cfg,
                              LabelPropagationStats *stats) {
  if (model.kind != ModelKind::graph) {
    throw std::invalid_argument("label_prop_refine: requires the graph model");
  }
  if (p.size() != model.n() || !is_consistent(model, p)) {
    throw std::invalid_argument("label_prop_refine: requires a consistent bipartition");
  }

  const Graph &g = model.graph;
  const NodeID n = g.n();
  const BlockID cluster = p.block[model.seed_local];

  std::vector<Weight> degree(n);
  for (NodeID v = 0; v < n; ++v) {
    degree[v] = g.weighted_degree(v);
  }
  Weight cut = edge_cut(g, p);
  Weight volume = 0;
  for (NodeID v = 0; v < n; ++v) {
    if (v != model.t_local && p.block[v] == cluster) {
      volume += degree[v];
    }
  }

  std::vector<NodeID> order;
  order.reserve(n);
  for (NodeID v = 0; v < n; ++v) {
    if (v != model.seed_local && v != model.t_local) {
      order.push_back(v);
    }
  }

  Rng rng(cfg.rng_seed);
  LabelPropagationStats local_stats;
  std::size_t moves_since_audit = 0;

  auto audit = [&] {
    Weight vol = 0;
    for (NodeID v = 0; v < n; ++v) {
      if (v != model.t_local && p.block[v] == cluster) {
        vol += degree[v];
      }
    }
    if (vol != volume || edge_cut(g, p) != cut) {
      throw std::logic_error("label_prop_refine: incremental cut/volume diverged");
    }
  };

  for (unsigned round = 0; round < cfg.max_rounds; ++round) {
    shuffle(order, rng);
    ++local_stats.rounds;
    bool changed_objective_terms = false;

    for (const NodeID v : order) {
      const bool inside = p.block[v] == cluster;
      Weight to_cluster = 0;
      const auto nbrs = g.neighbors(v);
      const auto weights = g.incident_weights(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (p.block[nbrs[i]] == cluster) {
          to_cluster += weights[i];
        }
      }
      const Weight to_rest = degree[v] - to_cluster;
      // Moving v out of C turns edges to C into cut edges and edges to the
      // rest into internal ones; moving in does the opposite.
      const Weight new_cut = inside ? cut - to_rest + to_cluster : cut - to_cluster + to_rest;
      const Weight new_volume = inside ? volume - degree[v] : volume + degree[v];
      if (new_volume <= 0) {
        continue;
      }

      bool accept = false;
      bool strict = false;
      if (volume <= 0) {
        // current cluster is degenerate; any positive-volume state is better
        accept = strict = true;
      } else {
        const int cmp = compare_ratio(new_cut, new_volume, cut, volume);
        if (cmp < 0) {
          accept = strict = true;
        } else if (cmp == 0) {
          accept = coin_flip(rng);
        }
      }
      if (!accept) {
        continue;
      }

      p.block[v] = 1 - p.block[v];
      if (new_cut != cut || new_volume != volume) {
        changed_objective_terms = true;
      }
      cut = new_cut;
      volume = new_volume;
      (strict ? local_stats.strict_moves : local_stats.zero_gain_moves) += 1;

      if (cfg.audit_every != 0 && ++moves_since_audit == cfg.audit_every) {
        moves_since_audit = 0;
        audit();
      }
    }

    if (!changed_objective_terms) {
      local_stats.converged = true;
      break;
    }
  }

  if (cfg.audit_every != 0) {
    audit();
  }
  p.cut_value = cut;
  if (stats != nullptr) {
    *stats = local_stats;
  }
  return p;
}

} // namespace lmc
