#include "lmc/cluster.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "lmc/ball.h"
#include "lmc/label_propagation.h"
#include "lmc/motif.h"
#include "lmc/partitioner.h"
#include "lmc/random.h"

namespace lmc {

void ClusterConfig::validate() const {
  if (reps_alpha < 1) {
    throw std::invalid_argument("cluster config: alpha must be at least 1");
  }
  if (beta < 1) {
    throw std::invalid_argument("cluster config: beta must be at least 1");
  }
  if (!(epsilon_lo > 0.0) || !(epsilon_lo <= epsilon_hi)) {
    throw std::invalid_argument("cluster config: need 0 < eps_lo <= eps_hi");
  }
  if (first_layers < 1) {
    throw std::invalid_argument("cluster config: first_layers must be at least 1");
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
  Stopwatch() : _start(Clock::now()) {}
  [[nodiscard]] double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(Clock::now() - _start).count();
  }

private:
  Clock::time_point _start;
};

} // namespace

ClusterResult local_motif_cluster(const Graph &g, NodeID u, const ClusterConfig &cfg) {
  cfg.validate();
  if (u >= g.n()) {
    throw std::out_of_range("local_motif_cluster: seed out of range");
  }

  const Stopwatch total;
  ClusterResult result;
  result.seed = u;
  result.cluster = {u};

  MotifConductance best;
  bool have_best = false;
  std::size_t partitionings = 0;

  for (unsigned rep = 1; rep <= cfg.reps_alpha; ++rep) {
    const unsigned layers = cfg.first_layers + rep - 1;
    const bool last = rep == cfg.reps_alpha;

    Stopwatch sw;
    const Ball ball = grow_ball(g, u, layers,
                                last && cfg.min_ball_size > 0 ? std::optional(cfg.min_ball_size)
                                                              : std::nullopt);
    result.timings.ball_ms += sw.elapsed_ms();

    sw = Stopwatch();
    std::vector<std::uint8_t> in_s(ball.hood.graph.n(), 0);
    std::fill(in_s.begin(), in_s.begin() + ball.size(), 1);
    const MotifCollection mc = enumerate_triangles(ball.hood.graph, in_s);
    result.timings.enumeration_ms += sw.elapsed_ms();
    result.balls_used.push_back({ball.layers, ball.size(), mc.size()});

    // A ball covering all of G leaves an empty complement; the whole graph
    // is not a cluster, so such balls are partitioned like any other.
    const bool whole_graph = ball.size() == g.n();
    if (ball.complete_at_requested_depth && !whole_graph) {
      if (mc.size() > 0) {
        // Nothing outside the component: the whole ball has no cut motif.
        result.cluster = ball.members;
        std::sort(result.cluster.begin(), result.cluster.end());
        result.phi_mu = 0.0;
        result.cut = 0;
        // volume in the model basis: each triangle adds 2 per node to the
        // weighted degree of the graph model, 1 per node to the net degree
        const Weight per_node = cfg.model_kind == ModelKind::graph ? 2 : 1;
        result.volume = per_node * 3 * static_cast<Weight>(mc.size());
        result.degenerate = false;
        result.component_shortcut = true;
        return result;
      }
      // Motif-free component; larger balls cannot change that.
      break;
    }
    if (mc.size() == 0) {
      if (ball.frontier_complete) {
        break;
      }
      continue;
    }

    sw = Stopwatch();
    const MotifModel model = build_model(cfg.model_kind, g, ball, mc);
    result.timings.model_ms += sw.elapsed_ms();

    for (unsigned j = 1; j <= cfg.beta; ++j) {
      // checked between partitionings only, so one always runs
      if (partitionings > 0 && total.elapsed_ms() / 1000.0 > cfg.time_limit_s) {
        result.time_limit_hit = true;
        break;
      }
      Rng rng(derive_seed(cfg.rng_seed, {rep, j}));
      PartitionerConfig pcfg;
      pcfg.epsilon = cfg.epsilon_lo + (cfg.epsilon_hi - cfg.epsilon_lo) * uniform_unit(rng);
      pcfg.rng_seed = rng();

      sw = Stopwatch();
      Bipartition p = enforce_consistency(model, bipartition(model, pcfg));
      result.timings.partition_ms += sw.elapsed_ms();

      if (cfg.model_kind == ModelKind::graph && cfg.lp_max_rounds > 0) {
        sw = Stopwatch();
        LabelPropagationConfig lcfg;
        lcfg.max_rounds = cfg.lp_max_rounds;
        lcfg.rng_seed = rng();
        p = label_prop_refine(model, std::move(p), lcfg);
        result.timings.local_search_ms += sw.elapsed_ms();
      }

      ++partitionings;
      MotifConductance phi = eval_motif_conductance(model, p);
      if (whole_graph && p.count(p.block[model.seed_local]) == model.n() - 1) {
        phi = MotifConductance{};
      }
      if (!have_best || phi.better_than(best)) {
        have_best = true;
        best = phi;
        result.cluster = cluster_members(model, p);
        std::sort(result.cluster.begin(), result.cluster.end());
      }
    }
    if (result.time_limit_hit) {
      break;
    }
  }

  if (have_best && !best.degenerate) {
    result.phi_mu = best.value;
    result.cut = best.cut;
    result.volume = best.volume;
    result.degenerate = false;
  } else {
    result.cluster = {u};
    result.phi_mu = 1.0;
    result.degenerate = true;
  }
  return result;
}

} // namespace lmc
