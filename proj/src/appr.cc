#include "lmc/appr.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lmc/motif.h"

namespace lmc {

WeightedMotifGraph build_W(const Graph &g) {
  const MotifCollection mc = enumerate_triangles(g);
  GraphBuilder builder(g.n());
  for (std::size_t i = 0; i < mc.size(); ++i) {
    const auto t = mc.motif(i);
    builder.add_edge(t[0], t[1]);
    builder.add_edge(t[0], t[2]);
    builder.add_edge(t[1], t[2]);
  }
  WeightedMotifGraph w;
  w.graph = std::move(builder).build(ParallelEdges::sum);
  w.triangles = mc.size();
  w.degree.resize(g.n());
  for (NodeID v = 0; v < g.n(); ++v) {
    w.degree[v] = w.graph.weighted_degree(v);
  }
  return w;
}

MotifConductanceValue global_motif_conductance(const WeightedMotifGraph &w,
                                               std::span<const NodeID> cluster) {
  std::unordered_set<NodeID> in_cluster(cluster.begin(), cluster.end());
  Weight cut = 0;
  Weight volume = 0;
  for (const NodeID v : in_cluster) {
    volume += w.degree[v];
    const auto nbrs = w.graph.neighbors(v);
    const auto weights = w.graph.incident_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!in_cluster.contains(nbrs[i])) {
        cut += weights[i];
      }
    }
  }
  MotifConductanceValue result;
  result.cut = cut / 2;
  result.denominator = std::min(volume, w.total_volume() - volume) / 2;
  if (result.denominator > 0) {
    result.value = static_cast<double>(cut) / static_cast<double>(std::min(volume, w.total_volume() - volume));
    result.degenerate = false;
  }
  return result;
}

PprVector approximate_ppr(const WeightedMotifGraph &w, NodeID u, const ApprConfig &cfg) {
  if (u >= w.graph.n()) {
    throw std::out_of_range("approximate_ppr: seed out of range");
  }
  std::unordered_map<NodeID, double> p;
  std::unordered_map<NodeID, double> r;
  std::deque<NodeID> queue;
  std::unordered_set<NodeID> queued;
  PprVector result;

  if (w.degree[u] == 0) {
    result.residual.emplace_back(u, 1.0);
    return result;
  }
  r[u] = 1.0;
  queue.push_back(u);
  queued.insert(u);

  while (!queue.empty()) {
    const NodeID v = queue.front();
    queue.pop_front();
    queued.erase(v);
    const double rv = r[v];
    const auto dv = static_cast<double>(w.degree[v]);
    if (rv < cfg.eps * dv) {
      continue;
    }
    ++result.pushes;
    p[v] += (1.0 - cfg.teleport_alpha) * rv;
    r[v] = 0.0;
    const double spread = cfg.teleport_alpha * rv / dv;
    const auto nbrs = w.graph.neighbors(v);
    const auto weights = w.graph.incident_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const NodeID x = nbrs[i];
      double &rx = r[x];
      rx += spread * static_cast<double>(weights[i]);
      if (rx >= cfg.eps * static_cast<double>(w.degree[x]) && queued.insert(x).second) {
        queue.push_back(x);
      }
    }
  }

  result.p.assign(p.begin(), p.end());
  std::sort(result.p.begin(), result.p.end());
  for (const auto &[v, rv] : r) {
    if (rv != 0.0) {
      result.residual.emplace_back(v, rv);
    }
  }
  std::sort(result.residual.begin(), result.residual.end());
  return result;
}

ClusterResult appr_sweep(const WeightedMotifGraph &w, NodeID u, const ApprConfig &cfg) {
  ClusterResult result;
  result.seed = u;
  result.cluster = {u};
  if (u >= w.graph.n()) {
    throw std::out_of_range("appr_sweep: seed out of range");
  }
  if (w.degree[u] == 0) {
    return result;
  }

  const PprVector ppr = approximate_ppr(w, u, cfg);
  std::vector<std::pair<double, NodeID>> order;
  order.reserve(ppr.p.size());
  for (const auto &[v, pv] : ppr.p) {
    order.emplace_back(pv / static_cast<double>(w.degree[v]), v);
  }
  std::sort(order.begin(), order.end(), [](const auto &a, const auto &b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  const Weight total = w.total_volume();
  std::unordered_set<NodeID> prefix;
  Weight cut = 0;
  Weight volume = 0;
  std::size_t best_len = 0;
  Weight best_cut = 0;
  Weight best_den = 0;

  for (std::size_t k = 0; k < order.size(); ++k) {
    const NodeID v = order[k].second;
    Weight inside = 0;
    const auto nbrs = w.graph.neighbors(v);
    const auto weights = w.graph.incident_weights(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (prefix.contains(nbrs[i])) {
        inside += weights[i];
      }
    }
    prefix.insert(v);
    cut += w.degree[v] - 2 * inside;
    volume += w.degree[v];
    const Weight den = std::min(volume, total - volume);
    if (den <= 0) {
      continue;
    }
    if (best_len == 0 || static_cast<__int128>(cut) * best_den < static_cast<__int128>(best_cut) * den) {
      best_len = k + 1;
      best_cut = cut;
      best_den = den;
    }
  }

  if (best_len == 0) {
    return result;
  }
  result.cluster.clear();
  for (std::size_t k = 0; k < best_len; ++k) {
    result.cluster.push_back(order[k].second);
  }
  std::sort(result.cluster.begin(), result.cluster.end());
  result.phi_mu = static_cast<double>(best_cut) / static_cast<double>(best_den);
  result.cut = best_cut / 2;
  result.volume = best_den / 2;
  result.degenerate = false;
  return result;
}

} // namespace lmc
