#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lmc/graph.h"

namespace lmc {

// Motif occurrences as flat pin lists of a fixed arity (3 for triangles),
// each sorted ascending, plus the per-node motif degree.
struct MotifCollection {
  std::size_t arity = 3;
  std::vector<NodeID> pins;
  std::vector<Weight> motif_degree;

  [[nodiscard]] std::size_t size() const { return pins.size() / arity; }
  [[nodiscard]] std::span<const NodeID> motif(std::size_t i) const {
    return {pins.data() + i * arity, arity};
  }
};

// Lists every triangle of g with at least one node v where in_s[v] != 0,
// each exactly once. Nodes are ranked by (degree, ID); each triangle is found
// from its highest-ranked node by marking lower-ranked neighbors and scanning
// their lower-ranked neighbors.
[[nodiscard]] MotifCollection enumerate_triangles(const Graph &g, std::span<const std::uint8_t> in_s);

// Every triangle of g.
[[nodiscard]] MotifCollection enumerate_triangles(const Graph &g);

[[nodiscard]] Weight motif_degree_of_set(const MotifCollection &mc, std::span<const NodeID> nodes);

} // namespace lmc
