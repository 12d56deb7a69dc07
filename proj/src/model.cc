#include "lmc/model.h"

#include <algorithm>
#include <stdexcept>

#include "lmc/io.h"

namespace lmc {

ModelKind parse_model_kind(const std::string &name) {
  if (name == "graph") {
    return ModelKind::graph;
  }
  if (name == "hypergraph") {
    return ModelKind::hypergraph;
  }
  throw std::invalid_argument("unknown model kind '" + name + "'");
}

const char *to_string(ModelKind kind) {
  return kind == ModelKind::graph ? "graph" : "hypergraph";
}

Weight MotifModel::volume(NodeID v) const {
  return kind == ModelKind::graph ? graph.weighted_degree(v) : hypergraph.weighted_net_degree(v);
}

namespace {

void fill_common(MotifModel &model, const Graph &g, const Ball &ball, const MotifCollection &mc) {
  const NodeID s = ball.size();
  model.seed_local = 0;
  model.t_local = s;
  model.to_global = ball.members;
  Weight inside = 0;
  for (const NodeID v : ball.members) {
    inside += g.node_weight(v);
  }
  model.node_weight_t = g.total_node_weight() - inside;
  model.num_motifs = mc.size();
}

} // namespace

MotifModel build_graph_model(const Graph &g, const Ball &ball, const MotifCollection &mc) {
  MotifModel model;
  model.kind = ModelKind::graph;
  fill_common(model, g, ball, mc);
  const NodeID s = ball.size();
  const NodeID t = s;

  GraphBuilder builder(s + 1);
  for (NodeID v = 0; v < s; ++v) {
    builder.set_node_weight(v, ball.hood.graph.node_weight(v));
  }
  builder.set_node_weight(t, model.node_weight_t);

  for (std::size_t i = 0; i < mc.size(); ++i) {
    const auto pins = mc.motif(i);
    for (std::size_t a = 0; a < pins.size(); ++a) {
      for (std::size_t b = a + 1; b < pins.size(); ++b) {
        const NodeID x = std::min(pins[a], t);
        const NodeID y = std::min(pins[b], t);
        if (x != y) {
          builder.add_edge(x, y, 1);
        }
      }
    }
  }
  model.graph = std::move(builder).build(ParallelEdges::sum);
  for (NodeID v = 0; v < s; ++v) {
    model.total_volume_S += model.graph.weighted_degree(v);
  }
  return model;
}

MotifModel build_hypergraph_model(const Graph &g, const Ball &ball, const MotifCollection &mc) {
  MotifModel model;
  model.kind = ModelKind::hypergraph;
  fill_common(model, g, ball, mc);
  const NodeID s = ball.size();
  const NodeID t = s;

  HypergraphBuilder builder(s + 1);
  for (NodeID v = 0; v < s; ++v) {
    builder.set_node_weight(v, ball.hood.graph.node_weight(v));
  }
  builder.set_node_weight(t, model.node_weight_t);

  std::vector<NodeID> net;
  for (std::size_t i = 0; i < mc.size(); ++i) {
    net.clear();
    for (const NodeID p : mc.motif(i)) {
      net.push_back(std::min(p, t));
    }
    builder.add_net(net, 1);
  }
  model.hypergraph = std::move(builder).build(true);
  for (NodeID v = 0; v < s; ++v) {
    model.total_volume_S += model.hypergraph.weighted_net_degree(v);
  }
  return model;
}

MotifModel build_model(ModelKind kind, const Graph &g, const Ball &ball, const MotifCollection &mc) {
  return kind == ModelKind::graph ? build_graph_model(g, ball, mc)
                                  : build_hypergraph_model(g, ball, mc);
}

bool MotifConductance::better_than(const MotifConductance &other) const {
  // a/b < c/d with b, d > 0  <=>  a*d < c*b
  if (degenerate || other.degenerate) {
    const double mine = degenerate ? 1.0 : value;
    const double theirs = other.degenerate ? 1.0 : other.value;
    return mine < theirs;
  }
  const __int128 lhs = static_cast<__int128>(cut) * other.volume;
  const __int128 rhs = static_cast<__int128>(other.cut) * volume;
  return lhs < rhs;
}

MotifConductance eval_motif_conductance(const MotifModel &model, const Bipartition &p) {
  if (p.size() != model.n()) {
    throw std::invalid_argument("eval_motif_conductance: partition size does not match model");
  }
  const BlockID cluster = p.block[model.seed_local];
  if (p.block[model.t_local] == cluster) {
    throw std::invalid_argument("eval_motif_conductance: seed and t share a block");
  }

  MotifConductance result;
  result.cut = model.kind == ModelKind::graph ? edge_cut(model.graph, p) : cut_net(model.hypergraph, p);
  for (NodeID v = 0; v < model.t_local; ++v) {
    if (p.block[v] == cluster) {
      result.volume += model.volume(v);
    }
  }
  if (result.volume == 0) {
    result.value = 1.0;
    result.degenerate = true;
  } else {
    result.value = static_cast<double>(result.cut) / static_cast<double>(result.volume);
    result.degenerate = false;
  }
  return result;
}

std::vector<NodeID> cluster_members(const MotifModel &model, const Bipartition &p) {
  std::vector<NodeID> members;
  const BlockID cluster = p.block[model.seed_local];
  for (NodeID v = 0; v < model.t_local; ++v) {
    if (p.block[v] == cluster) {
      members.push_back(model.to_global[v]);
    }
  }
  return members;
}

bool volume_assumption_holds(const Graph &g, const Ball &ball) {
  const MotifCollection all = enumerate_triangles(g);
  Weight inside = 0;
  for (const NodeID v : ball.members) {
    inside += all.motif_degree[v];
  }
  const Weight total = 3 * static_cast<Weight>(all.size());
  return inside <= total - inside;
}

void write_model(const MotifModel &model, std::ostream &out) {
  if (model.kind == ModelKind::graph) {
    write_metis(model.graph, out);
  } else {
    write_hmetis(model.hypergraph, out);
  }
}

} // namespace lmc
