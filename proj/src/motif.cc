#include "lmc/motif.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lmc {

MotifCollection enumerate_triangles(const Graph &g, std::span<const std::uint8_t> in_s) {
  const NodeID n = g.n();
  if (in_s.size() != n) {
    throw std::invalid_argument("enumerate_triangles: membership mask has wrong length");
  }

  std::vector<NodeID> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](NodeID a, NodeID b) {
    const NodeID da = g.degree(a);
    const NodeID db = g.degree(b);
    return da != db ? da < db : a < b;
  });
  std::vector<NodeID> rank(n);
  for (NodeID i = 0; i < n; ++i) {
    rank[order[i]] = i;
  }

  // lower[v]: neighbors with smaller rank
  std::vector<EdgeID> offsets(n + 1, 0);
  for (NodeID v = 0; v < n; ++v) {
    for (const NodeID w : g.neighbors(v)) {
      offsets[v + 1] += rank[w] < rank[v];
    }
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<NodeID> lower(offsets.back());
  for (NodeID v = 0; v < n; ++v) {
    EdgeID pos = offsets[v];
    for (const NodeID w : g.neighbors(v)) {
      if (rank[w] < rank[v]) {
        lower[pos++] = w;
      }
    }
  }

  MotifCollection mc;
  mc.arity = 3;
  mc.motif_degree.assign(n, 0);
  std::vector<NodeID> marker(n, kInvalidNode);

  for (NodeID v = 0; v < n; ++v) {
    for (EdgeID i = offsets[v]; i < offsets[v + 1]; ++i) {
      marker[lower[i]] = v;
    }
    for (EdgeID i = offsets[v]; i < offsets[v + 1]; ++i) {
      const NodeID x = lower[i];
      for (EdgeID k = offsets[x]; k < offsets[x + 1]; ++k) {
        const NodeID y = lower[k];
        if (marker[y] != v) {
          continue;
        }
        if (!in_s[v] && !in_s[x] && !in_s[y]) {
          continue;
        }
        NodeID tri[3] = {v, x, y};
        std::sort(tri, tri + 3);
        mc.pins.insert(mc.pins.end(), tri, tri + 3);
        ++mc.motif_degree[v];
        ++mc.motif_degree[x];
        ++mc.motif_degree[y];
      }
    }
  }
  return mc;
}

MotifCollection enumerate_triangles(const Graph &g) {
  const std::vector<std::uint8_t> all(g.n(), 1);
  return enumerate_triangles(g, all);
}

Weight motif_degree_of_set(const MotifCollection &mc, std::span<const NodeID> nodes) {
  Weight sum = 0;
  for (const NodeID v : nodes) {
    sum += mc.motif_degree.at(v);
  }
  return sum;
}

} // namespace lmc
