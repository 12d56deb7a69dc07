#include "doctest.h"

#include <stdexcept>

#include "lmc/bipartition.h"
#include "lmc/graph.h"
#include "lmc/hypergraph.h"
#include "support.h"

using namespace lmc;
using namespace lmc::testing;

TEST_CASE("builder drops self-loops and parallel edges") {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 0);
  b.add_edge(1, 2);
  b.add_edge(3, 3);
  const Graph g = std::move(b).build();
  CHECK(g.n() == 4);
  CHECK(g.m() == 3);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_weight(1, 2) == 1);
}

TEST_CASE("builder sums parallel edges when asked") {
  GraphBuilder b(3);
  b.add_edge(0, 1, 2);
  b.add_edge(1, 0, 3);
  const Graph g = std::move(b).build(ParallelEdges::sum);
  CHECK(g.edge_weight(0, 1) == 5);
  CHECK(g.edge_weight(1, 0) == 5);
  CHECK(g.weighted_degree(0) == 5);
}

TEST_CASE("graph constructor rejects broken CSR") {
  // asymmetric: 0 -> 1 without 1 -> 0
  CHECK_THROWS_AS(Graph({0, 1, 1}, {1}, {1}, {1, 1}), std::invalid_argument);
  // self-loop
  CHECK_THROWS_AS(Graph({0, 1, 2}, {0, 1}, {1, 1}, {1, 1}), std::invalid_argument);
  // unsorted neighbors
  CHECK_THROWS_AS(Graph({0, 2, 3, 4}, {2, 1, 0, 0}, {1, 1, 1, 1}, {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("graph invariants on random graphs") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = erdos_renyi(30, 0.2, rng);
    EdgeID total = 0;
    for (NodeID u = 0; u < g.n(); ++u) {
      total += g.degree(u);
      for (const NodeID v : g.neighbors(u)) {
        CHECK(g.has_edge(v, u));
      }
    }
    CHECK(total == 2 * g.m());
  }
}

TEST_CASE("edge_cut") {
  const Graph tri = clique(3);
  CHECK(edge_cut(tri, as_partition({0, 1, 1})) == 2);

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = erdos_renyi(12, 0.4, rng);
    const auto blocks = random_blocks(12, rng);
    CHECK(edge_cut(g, as_partition(blocks)) == brute_edge_cut(g, blocks));

    auto swapped = blocks;
    for (auto &b : swapped) {
      b = 1 - b;
    }
    CHECK(edge_cut(g, as_partition(swapped)) == edge_cut(g, as_partition(blocks)));
    CHECK(cut_net(to_hypergraph(g), as_partition(blocks)) == edge_cut(g, as_partition(blocks)));
  }
}

TEST_CASE("cut_net") {
  HypergraphBuilder b(3);
  const NodeID pins[] = {0, 1, 2};
  b.add_net(pins, 5);
  const Hypergraph h = std::move(b).build();
  CHECK(cut_net(h, as_partition({0, 1, 1})) == 5);
  CHECK(cut_net(h, as_partition({0, 0, 0})) == 0);

  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const NodeID n = 8;
    HypergraphBuilder hb(n);
    std::vector<std::vector<NodeID>> nets;
    std::vector<Weight> weights;
    for (int e = 0; e < 10; ++e) {
      std::vector<NodeID> net;
      for (NodeID v = 0; v < n; ++v) {
        if (uniform_unit(rng) < 0.35) {
          net.push_back(v);
        }
      }
      if (net.size() < 2) {
        continue;
      }
      const Weight w = 1 + static_cast<Weight>(uniform_below(rng, 5));
      hb.add_net(net, w);
      nets.push_back(net);
      weights.push_back(w);
    }
    const Hypergraph hg = std::move(hb).build(false);
    const auto blocks = random_blocks(n, rng);
    Weight expected = 0;
    for (std::size_t e = 0; e < nets.size(); ++e) {
      std::set<BlockID> seen;
      for (const NodeID v : nets[e]) {
        seen.insert(blocks[v]);
      }
      expected += seen.size() == 2 ? weights[e] : 0;
    }
    CHECK(cut_net(hg, as_partition(blocks)) == expected);
  }
}

TEST_CASE("hypergraph builder merges parallel nets and drops tiny ones") {
  HypergraphBuilder b(4);
  const NodeID a[] = {2, 0, 1};
  const NodeID c[] = {0, 1, 2, 2};
  const NodeID single[] = {3, 3};
  b.add_net(a, 1);
  b.add_net(c, 2);
  b.add_net(single, 1);
  const Hypergraph h = std::move(b).build(true);
  REQUIRE(h.num_nets() == 1);
  CHECK(h.net_weight(0) == 3);
  CHECK(h.net_size(0) == 3);
  CHECK(h.incident_nets(3).empty());
  CHECK(h.weighted_net_degree(1) == 3);

  HypergraphBuilder bad(2);
  const NodeID out_of_range[] = {0, 5};
  CHECK_THROWS_AS(bad.add_net(out_of_range, 1), std::invalid_argument);
  const NodeID ok[] = {0, 1};
  CHECK_THROWS_AS(bad.add_net(ok, 0), std::invalid_argument);
}

TEST_CASE("balance bound") {
  CHECK(max_block_weight(10, 0.1) == 5);
  CHECK(max_block_weight(11, 0.5) == 9);
  CHECK(max_block_weight(21, 0.9) == 20);
  CHECK(is_balanced_unweighted(as_partition({0, 0, 1, 1}), 0.03));
  CHECK_FALSE(is_balanced_unweighted(as_partition({0, 0, 0, 1}), 0.03));
}
