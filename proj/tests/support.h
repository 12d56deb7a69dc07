#pragma once

// Test-only generators and brute-force oracles. The oracles never call into
// the code they check; instance generators use ball growth and enumeration.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <vector>

#include "lmc/ball.h"
#include "lmc/bipartition.h"
#include "lmc/graph.h"
#include "lmc/hypergraph.h"
#include "lmc/motif.h"
#include "lmc/random.h"

namespace lmc::testing {

using Triple = std::array<NodeID, 3>;

inline Graph erdos_renyi(NodeID n, double p, Rng &rng) {
  GraphBuilder b(n);
  for (NodeID u = 0; u < n; ++u) {
    for (NodeID v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) {
        b.add_edge(u, v);
      }
    }
  }
  return std::move(b).build();
}

inline Graph from_edges(NodeID n, const std::vector<std::pair<NodeID, NodeID>> &edges) {
  GraphBuilder b(n);
  for (const auto &[u, v] : edges) {
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

inline Graph clique(NodeID k) {
  GraphBuilder b(k);
  for (NodeID u = 0; u < k; ++u) {
    for (NodeID v = u + 1; v < k; ++v) {
      b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

// Cliques {0..k-1} and {k..2k-1} joined by the edge {k-1, k}.
inline Graph two_cliques_with_bridge(NodeID k) {
  GraphBuilder b(2 * k);
  for (NodeID base : {NodeID{0}, k}) {
    for (NodeID u = 0; u < k; ++u) {
      for (NodeID v = u + 1; v < k; ++v) {
        b.add_edge(base + u, base + v);
      }
    }
  }
  b.add_edge(k - 1, k);
  return std::move(b).build();
}

// Adjacency-matrix triple loop.
inline std::vector<Triple> brute_force_triangles(const Graph &g) {
  const NodeID n = g.n();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (NodeID u = 0; u < n; ++u) {
    for (const NodeID v : g.neighbors(u)) {
      adj[u][v] = 1;
    }
  }
  std::vector<Triple> out;
  for (NodeID a = 0; a < n; ++a) {
    for (NodeID b = a + 1; b < n; ++b) {
      if (!adj[a][b]) {
        continue;
      }
      for (NodeID c = b + 1; c < n; ++c) {
        if (adj[a][c] && adj[b][c]) {
          out.push_back({a, b, c});
        }
      }
    }
  }
  return out;
}

// |M'| / min(d_mu(C), d_mu(V \ C)) from every triangle of g; degenerate
// (returned as 1.0) when the denominator is zero.
struct DefinitionConductance {
  std::int64_t cut = 0;
  std::int64_t denominator = 0;
  double value = 1.0;
};

inline DefinitionConductance definition_motif_conductance(const Graph &g,
                                                          const std::vector<NodeID> &cluster) {
  std::vector<char> in(g.n(), 0);
  for (const NodeID v : cluster) {
    in[v] = 1;
  }
  DefinitionConductance r;
  std::int64_t deg_in = 0;
  std::int64_t deg_out = 0;
  for (const Triple &t : brute_force_triangles(g)) {
    const int k = in[t[0]] + in[t[1]] + in[t[2]];
    deg_in += k;
    deg_out += 3 - k;
    if (k == 1 || k == 2) {
      ++r.cut;
    }
  }
  r.denominator = std::min(deg_in, deg_out);
  if (r.denominator > 0) {
    r.value = static_cast<double>(r.cut) / static_cast<double>(r.denominator);
  }
  return r;
}

// Sum over an explicit list of (u, v, w) edges.
inline Weight brute_edge_cut(const Graph &g, const std::vector<BlockID> &blocks) {
  Weight cut = 0;
  for (NodeID u = 0; u < g.n(); ++u) {
    for (NodeID v = 0; v < g.n(); ++v) {
      if (u < v && blocks[u] != blocks[v]) {
        cut += g.edge_weight(u, v);
      }
    }
  }
  return cut;
}

// Exhaustive minimum cut-net over all bipartitions with both blocks nonempty
// and unit-weight block sizes within max_block. Returns max() if none exists.
inline Weight exhaustive_min_cut(const Hypergraph &h, Weight max_block) {
  const NodeID n = h.n();
  Weight best = std::numeric_limits<Weight>::max();
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    const auto ones = static_cast<Weight>(__builtin_popcount(mask));
    if (ones > max_block || static_cast<Weight>(n) - ones > max_block) {
      continue;
    }
    Weight cut = 0;
    for (NetID e = 0; e < h.num_nets(); ++e) {
      bool zero = false;
      bool one = false;
      for (const NodeID p : h.pins(e)) {
        ((mask >> p) & 1u ? one : zero) = true;
      }
      if (zero && one) {
        cut += h.net_weight(e);
      }
    }
    best = std::min(best, cut);
  }
  return best;
}

inline std::vector<BlockID> random_blocks(NodeID n, Rng &rng) {
  std::vector<BlockID> blocks(n);
  do {
    for (auto &b : blocks) {
      b = static_cast<BlockID>(rng() & 1u);
    }
  } while (std::count(blocks.begin(), blocks.end(), 0) == 0 ||
           std::count(blocks.begin(), blocks.end(), 1) == 0);
  return blocks;
}

inline Bipartition as_partition(std::vector<BlockID> blocks) {
  Bipartition p;
  p.block = std::move(blocks);
  return p;
}

// Random S inside a random graph: a BFS ball around a random seed.
inline Ball random_ball(const Graph &g, Rng &rng) {
  const auto u = static_cast<NodeID>(uniform_below(rng, g.n()));
  const auto layers = static_cast<unsigned>(1 + uniform_below(rng, 2));
  return grow_ball(g, u, layers);
}

inline std::vector<std::uint8_t> ball_mask(const Ball &ball) {
  std::vector<std::uint8_t> in_s(ball.hood.graph.n(), 0);
  std::fill(in_s.begin(), in_s.begin() + ball.size(), 1);
  return in_s;
}

// Model-sized bipartition with the seed (node 0) in block 0, t (node n-1) in
// block 1 and every other node placed by a coin flip.
inline std::vector<BlockID> random_consistent_blocks(NodeID n, Rng &rng) {
  if (n < 2) {
    throw std::invalid_argument("random_consistent_blocks: model needs a seed and t");
  }
  std::vector<BlockID> blocks(n);
  for (auto &b : blocks) {
    b = static_cast<BlockID>(rng() & 1u);
  }
  blocks.front() = 0;
  blocks.back() = 1;
  return blocks;
}

// Global IDs of the block-0 ball members, i.e. the cluster C of a consistent
// model partition from random_consistent_blocks.
inline std::vector<NodeID> cluster_of(const Ball &ball, const std::vector<BlockID> &blocks) {
  std::vector<NodeID> c;
  for (NodeID v = 0; v < ball.size(); ++v) {
    if (blocks[v] == 0) {
      c.push_back(ball.members[v]);
    }
  }
  return c;
}

// A graph, a ball in it and the triangles of the ball's closed hood that
// touch the ball.
struct Instance {
  Graph g;
  Ball ball;
  MotifCollection mc;
};

inline Instance make_instance(Graph g, NodeID u, unsigned layers) {
  Ball ball = grow_ball(g, u, layers);
  MotifCollection mc = enumerate_triangles(ball.hood.graph, ball_mask(ball));
  return {std::move(g), std::move(ball), std::move(mc)};
}

// Random graph with 10..max_n nodes and edge probability in [0.1, 0.4], ball of
// one or two layers around a random seed.
inline Instance random_instance(Rng &rng, NodeID max_n = 50) {
  const auto n = static_cast<NodeID>(10 + uniform_below(rng, max_n - 9));
  const double p = 0.1 + 0.3 * uniform_unit(rng);
  Graph g = erdos_renyi(n, p, rng);
  const auto u = static_cast<NodeID>(uniform_below(rng, n));
  return make_instance(std::move(g), u, static_cast<unsigned>(1 + uniform_below(rng, 2)));
}

// Instance whose model has at most max_model_nodes nodes (|S| + 1).
inline Instance small_instance(Rng &rng, NodeID max_model_nodes) {
  for (;;) {
    const auto n = static_cast<NodeID>(12 + uniform_below(rng, 19));
    const double p = 0.15 + 0.25 * uniform_unit(rng);
    Graph g = erdos_renyi(n, p, rng);
    const auto u = static_cast<NodeID>(uniform_below(rng, n));
    Ball ball = grow_ball(g, u, 1);
    if (ball.size() >= 3 && ball.size() + 1 <= max_model_nodes) {
      MotifCollection mc = enumerate_triangles(ball.hood.graph, ball_mask(ball));
      if (mc.size() > 0) {
        return {std::move(g), std::move(ball), std::move(mc)};
      }
    }
  }
}

} // namespace lmc::testing
