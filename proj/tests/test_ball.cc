#include "doctest.h"

#include <deque>
#include <set>

#include "lmc/ball.h"
#include "support.h"

using namespace lmc;
using namespace lmc::testing;

namespace {

// Plain BFS distances, -1 for unreachable.
std::vector<int> bfs_distances(const Graph &g, NodeID u) {
  std::vector<int> dist(g.n(), -1);
  std::deque<NodeID> q{u};
  dist[u] = 0;
  while (!q.empty()) {
    const NodeID v = q.front();
    q.pop_front();
    for (const NodeID w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

Graph path(NodeID n) {
  GraphBuilder b(n);
  for (NodeID v = 0; v + 1 < n; ++v) {
    b.add_edge(v, v + 1);
  }
  return std::move(b).build();
}

} // namespace

TEST_CASE("star from the center") {
  GraphBuilder b(6);
  for (NodeID v = 1; v < 6; ++v) {
    b.add_edge(0, v);
  }
  const Graph star = std::move(b).build();
  const Ball ball = grow_ball(star, 0, 1);
  CHECK(ball.size() == 6);
  CHECK(ball.frontier_complete);
  CHECK(ball.complete_at_requested_depth);
  CHECK(ball.members.front() == 0);
}

TEST_CASE("path from an end") {
  const Graph g = path(10);
  const Ball ball = grow_ball(g, 0, 2);
  CHECK(ball.size() == 3);
  CHECK_FALSE(ball.frontier_complete);
  // closed hood adds node 3
  CHECK(ball.hood.graph.n() == 4);
  CHECK(ball.hood.to_global[3] == 3);
}

TEST_CASE("minimum size adds whole layers") {
  const Graph g = path(10);
  const Ball ball = grow_ball(g, 0, 1, NodeID{5});
  CHECK(ball.size() == 5);
  CHECK(ball.layers == 4);

  const Ball all = grow_ball(g, 0, 1, NodeID{100});
  CHECK(all.size() == 10);
  CHECK(all.frontier_complete);
  CHECK_FALSE(all.complete_at_requested_depth);
}

TEST_CASE("isolated seed") {
  const Graph g = from_edges(3, {{1, 2}});
  const Ball ball = grow_ball(g, 0, 1);
  CHECK(ball.size() == 1);
  CHECK(ball.frontier_complete);
  CHECK(ball.complete_at_requested_depth);
  CHECK(ball.hood.graph.n() == 1);
}

TEST_CASE("balls match BFS levels on random graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = erdos_renyi(500, 0.05, rng);
    const auto u = static_cast<NodeID>(uniform_below(rng, g.n()));
    const Ball ball = grow_ball(g, u, 1, NodeID{100});
    const auto dist = bfs_distances(g, u);

    CHECK((ball.size() >= 100 || ball.frontier_complete));
    std::set<NodeID> expected;
    for (NodeID v = 0; v < g.n(); ++v) {
      if (dist[v] >= 0 && dist[v] <= static_cast<int>(ball.layers)) {
        expected.insert(v);
      }
    }
    CHECK(std::set<NodeID>(ball.members.begin(), ball.members.end()) == expected);
  }
}

TEST_CASE("ball properties: determinism, monotone layers, boundary") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = erdos_renyi(80, 0.04, rng);
    const auto u = static_cast<NodeID>(uniform_below(rng, g.n()));
    const Ball a = grow_ball(g, u, 2);
    const Ball b = grow_ball(g, u, 2);
    CHECK(a.members == b.members);
    CHECK(a.hood.to_global == b.hood.to_global);

    const Ball bigger = grow_ball(g, u, 3);
    const std::set<NodeID> big(bigger.members.begin(), bigger.members.end());
    for (const NodeID v : a.members) {
      CHECK(big.contains(v));
    }
    if (a.frontier_complete) {
      CHECK(a.hood.graph.n() == a.size());
    }
  }
}

TEST_CASE("closed hood of a triangle node is the triangle") {
  const Graph tri = clique(3);
  const std::vector<NodeID> s{1};
  const LocalSubgraph hood = induced_closed_hood(tri, s);
  CHECK(hood.graph.n() == 3);
  CHECK(hood.graph.m() == 3);
  CHECK(hood.to_global[0] == 1);
}

TEST_CASE("closed hood matches brute-force induced subgraph") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = erdos_renyi(50, 0.08, rng);
    std::vector<NodeID> all(g.n());
    std::iota(all.begin(), all.end(), 0);
    shuffle(all, rng);
    const std::vector<NodeID> s(all.begin(), all.begin() + 8);

    const LocalSubgraph hood = induced_closed_hood(g, s);

    std::set<NodeID> closed(s.begin(), s.end());
    for (NodeID v = 0; v < g.n(); ++v) {
      for (const NodeID w : s) {
        if (g.has_edge(v, w)) {
          closed.insert(v);
        }
      }
    }
    CHECK(hood.graph.n() == closed.size());
    for (NodeID i = 0; i < 8; ++i) {
      CHECK(hood.to_global[i] == s[i]);
    }
    for (NodeID a = 0; a < hood.graph.n(); ++a) {
      CHECK(hood.local(hood.to_global[a]) == a);
      CHECK(closed.contains(hood.to_global[a]));
      for (NodeID b = 0; b < hood.graph.n(); ++b) {
        CHECK(hood.graph.has_edge(a, b) == g.has_edge(hood.to_global[a], hood.to_global[b]));
      }
    }
  }
}

TEST_CASE("closed hood of everything is the graph") {
  Rng rng(2);
  const Graph g = erdos_renyi(30, 0.2, rng);
  std::vector<NodeID> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  const LocalSubgraph hood = induced_closed_hood(g, all);
  CHECK(hood.graph.raw_adjacency() == g.raw_adjacency());
}
