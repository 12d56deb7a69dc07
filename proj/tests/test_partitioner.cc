#include "doctest.h"

#include <numeric>

#include "lmc/model.h"
#include "lmc/partitioner.h"
#include "support.h"

using namespace lmc;
using namespace lmc::testing;

namespace {

// Triangles {0,1,2} and {3,4,5} joined by the edge {2,3}.
Graph bridged_triangles() {
  return from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

Weight random_balanced_min_cut(const Hypergraph &h, Weight max_block, int samples, Rng &rng) {
  const NodeID n = h.n();
  const Weight lo = std::max<Weight>(1, n - max_block);
  const Weight hi = std::min<Weight>(n - 1, max_block);
  std::vector<NodeID> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Weight best = std::numeric_limits<Weight>::max();
  for (int s = 0; s < samples; ++s) {
    shuffle(perm, rng);
    const auto k = lo + static_cast<Weight>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
    std::vector<BlockID> blocks(n, 1);
    for (Weight i = 0; i < k; ++i) {
      blocks[perm[i]] = 0;
    }
    best = std::min(best, cut_net(h, as_partition(blocks)));
  }
  return best;
}

void check_sound(const Hypergraph &h, const Bipartition &p, double eps) {
  CHECK(p.size() == h.n());
  CHECK(p.both_blocks_nonempty());
  CHECK(is_balanced_unweighted(p, eps));
  CHECK(p.cut_value == cut_net(h, p));
}

} // namespace

TEST_CASE("bridged triangles split at the bridge") {
  const Hypergraph h = to_hypergraph(bridged_triangles());
  REQUIRE(exhaustive_min_cut(h, max_block_weight(6, 0.1)) == 1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    PartitionerConfig cfg;
    cfg.epsilon = 0.1;
    cfg.rng_seed = seed;
    const Bipartition p = bipartition(h, cfg);
    CHECK(p.cut_value == 1);
    CHECK(p.block[0] == p.block[1]);
    CHECK(p.block[1] == p.block[2]);
    CHECK(p.block[3] == p.block[4]);
    CHECK(p.block[4] == p.block[5]);
    CHECK(p.block[2] != p.block[3]);
  }
}

TEST_CASE("K2 splits into singletons") {
  GraphBuilder b(2);
  b.add_edge(0, 1, 7);
  const Hypergraph h = to_hypergraph(std::move(b).build());
  PartitionerConfig cfg;
  const Bipartition p = bipartition(h, cfg);
  CHECK(p.block[0] != p.block[1]);
  CHECK(p.cut_value == 7);
}

TEST_CASE("single node is rejected") {
  const Hypergraph h = to_hypergraph(GraphBuilder(1).build());
  CHECK_THROWS_AS(static_cast<void>(bipartition(h, PartitionerConfig{})), std::invalid_argument);
}

TEST_CASE("config validation") {
  PartitionerConfig cfg;
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.coarsening_limit = 3;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.init_tries = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("20-node models beat random balanced sampling") {
  Rng rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = erdos_renyi(40, 0.2, rng);
    Ball ball = grow_ball(g, 0, 1);
    if (ball.size() < 19) {
      continue;
    }
    std::vector<NodeID> members(ball.members.begin(), ball.members.begin() + 19);
    // Fixed-size S: trim the ball to 19 members.
    Ball trimmed = ball;
    trimmed.members = members;
    trimmed.hood = induced_closed_hood(g, members);
    const MotifCollection mc = enumerate_triangles(trimmed.hood.graph, ball_mask(trimmed));
    const MotifModel m = build_graph_model(g, trimmed, mc);
    REQUIRE(m.n() == 20);

    PartitionerConfig cfg;
    cfg.epsilon = 0.5;
    cfg.rng_seed = static_cast<std::uint64_t>(trial);
    const Bipartition p = bipartition(m, cfg);
    const Hypergraph view = partition_view(m);
    check_sound(view, p, 0.5);
    CHECK(p.cut_value == edge_cut(m.graph, p));
    CHECK(p.cut_value <= random_balanced_min_cut(view, max_block_weight(20, 0.5), 1000, rng));
  }
}

TEST_CASE("small models: sound and near the exhaustive optimum") {
  Rng rng(223);
  int within = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    const Instance inst = small_instance(rng, 16);
    const auto kind = trial % 2 == 0 ? ModelKind::graph : ModelKind::hypergraph;
    const MotifModel m = build_model(kind, inst.g, inst.ball, inst.mc);
    PartitionerConfig cfg;
    cfg.epsilon = 0.05 + 0.85 * uniform_unit(rng);
    cfg.rng_seed = rng();
    const Bipartition p = bipartition(m, cfg);
    const Hypergraph view = partition_view(m);
    check_sound(view, p, cfg.epsilon);
    const Weight opt = exhaustive_min_cut(view, max_block_weight(view.n(), cfg.epsilon));
    CHECK(p.cut_value >= opt);
    if (2 * p.cut_value <= 3 * opt) {
      ++within;
    }
  }
  CHECK(within * 10 >= trials * 9);
}

TEST_CASE("larger random hypergraphs stay balanced and exact") {
  Rng rng(227);
  for (int trial = 0; trial < 10; ++trial) {
    const auto n = static_cast<NodeID>(200 + uniform_below(rng, 300));
    HypergraphBuilder b(n);
    for (int e = 0; e < 3 * static_cast<int>(n); ++e) {
      std::vector<NodeID> pins;
      const auto size = 2 + uniform_below(rng, 3);
      for (std::uint64_t k = 0; k < size; ++k) {
        pins.push_back(static_cast<NodeID>(uniform_below(rng, n)));
      }
      std::ranges::sort(pins);
      pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
      if (pins.size() >= 2) {
        b.add_net(pins, static_cast<Weight>(1 + uniform_below(rng, 3)));
      }
    }
    const Hypergraph h = std::move(b).build();
    PartitionerConfig cfg;
    cfg.epsilon = 0.03 + 0.5 * uniform_unit(rng);
    cfg.rng_seed = static_cast<std::uint64_t>(trial);
    const Bipartition p = bipartition(h, cfg);
    check_sound(h, p, cfg.epsilon);
  }
}

TEST_CASE("bipartition is deterministic for a fixed seed") {
  Rng rng(229);
  const Instance inst = random_instance(rng);
  const MotifModel m = build_graph_model(inst.g, inst.ball, inst.mc);
  PartitionerConfig cfg;
  cfg.rng_seed = 99;
  CHECK(bipartition(m, cfg).block == bipartition(m, cfg).block);
}

TEST_CASE("coarsening respects the weight cap and projection preserves the cut") {
  Rng rng(233);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = erdos_renyi(150, 0.05, rng);
    const Hypergraph h = to_hypergraph(g);
    const multilevel::CoarseLevel level = multilevel::coarsen(h, 2, rng);
    CHECK(level.coarse_of.size() == h.n());
    CHECK(level.hypergraph.n() < h.n());
    CHECK(level.hypergraph.total_node_weight() == h.total_node_weight());
    std::vector<Weight> weight(level.hypergraph.n(), 0);
    for (NodeID v = 0; v < h.n(); ++v) {
      weight[level.coarse_of[v]] += h.node_weight(v);
    }
    for (NodeID c = 0; c < level.hypergraph.n(); ++c) {
      CHECK(weight[c] == level.hypergraph.node_weight(c));
      CHECK(weight[c] <= 2);
    }
    const auto coarse_blocks = random_blocks(level.hypergraph.n(), rng);
    const auto fine_blocks = multilevel::project(level, coarse_blocks);
    CHECK(cut_net(level.hypergraph, as_partition(coarse_blocks)) ==
          cut_net(h, as_partition(fine_blocks)));
  }
}

TEST_CASE("FM never increases the cut and keeps balance") {
  Rng rng(239);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = erdos_renyi(60, 0.1, rng);
    const Hypergraph h = to_hypergraph(g);
    const Weight max_block = max_block_weight(h.n(), 0.1);
    std::vector<BlockID> blocks(h.n());
    std::vector<NodeID> perm(h.n());
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    for (NodeID i = 0; i < h.n(); ++i) {
      blocks[perm[i]] = i < h.n() / 2 ? 0 : 1;
    }
    const Weight before = cut_net(h, as_partition(blocks));
    const Weight after = multilevel::fm_refine(h, blocks, max_block, 5);
    CHECK(after <= before);
    CHECK(after == cut_net(h, as_partition(blocks)));
    const Bipartition p = as_partition(blocks);
    CHECK(p.count(0) <= max_block);
    CHECK(p.count(1) <= max_block);
    CHECK(p.both_blocks_nonempty());
  }
}

TEST_CASE("enforce_consistency") {
  const Instance inst = make_instance(clique(3), 0, 1);
  const MotifModel m = build_graph_model(inst.g, inst.ball, inst.mc);

  const Bipartition fixed = enforce_consistency(m, as_partition({1, 1, 0, 1}));
  CHECK(fixed.block == std::vector<BlockID>{0, 1, 0, 1});
  CHECK(fixed.cut_value == edge_cut(m.graph, fixed));

  const Bipartition same = enforce_consistency(m, as_partition({0, 1, 0, 1}));
  CHECK(same.block == std::vector<BlockID>{0, 1, 0, 1});

  Rng rng(241);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance r = random_instance(rng);
    const MotifModel rm = build_graph_model(r.g, r.ball, r.mc);
    std::vector<BlockID> blocks(rm.n());
    for (auto &b : blocks) {
      b = static_cast<BlockID>(rng() & 1u);
    }
    const Bipartition out = enforce_consistency(rm, as_partition(blocks));
    CHECK(is_consistent(rm, out));
    NodeID differ = 0;
    for (NodeID v = 0; v < rm.n(); ++v) {
      differ += out.block[v] != blocks[v];
    }
    CHECK(differ <= 1);
    if (differ == 1) {
      CHECK(out.block[rm.seed_local] != blocks[rm.seed_local]);
    }
  }
}
