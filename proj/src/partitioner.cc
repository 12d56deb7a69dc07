#include "lmc/partitioner.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace lmc {

void PartitionerConfig::validate() const {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("partitioner: epsilon must be positive");
  }
  if (coarsening_limit < 4) {
    throw std::invalid_argument("partitioner: coarsening_limit must be at least 4");
  }
  if (init_tries < 1) {
    throw std::invalid_argument("partitioner: init_tries must be at least 1");
  }
}

namespace multilevel {

CoarseLevel coarsen(const Hypergraph &h, Weight max_node_weight, Rng &rng, unsigned level) {
  const NodeID n = h.n();
  std::vector<NodeID> order(n);
  std::iota(order.begin(), order.end(), 0);
  shuffle(order, rng);

  std::vector<NodeID> partner(n, kInvalidNode);
  std::vector<double> rating(n, 0.0);
  std::vector<NodeID> touched;

  for (const NodeID v : order) {
    if (partner[v] != kInvalidNode) {
      continue;
    }
    touched.clear();
    for (const NetID e : h.incident_nets(v)) {
      const double score = static_cast<double>(h.net_weight(e)) / static_cast<double>(h.net_size(e) - 1);
      for (const NodeID u : h.pins(e)) {
        if (u == v || partner[u] != kInvalidNode) {
          continue;
        }
        if (rating[u] == 0.0) {
          touched.push_back(u);
        }
        rating[u] += score;
      }
    }
    NodeID best = kInvalidNode;
    double best_rating = 0.0;
    for (const NodeID u : touched) {
      if (partner[u] == kInvalidNode && h.node_weight(u) + h.node_weight(v) <= max_node_weight &&
          (rating[u] > best_rating || (rating[u] == best_rating && u < best))) {
        best = u;
        best_rating = rating[u];
      }
      rating[u] = 0.0;
    }
    if (best != kInvalidNode) {
      partner[v] = best;
      partner[best] = v;
    } else {
      partner[v] = v;
    }
  }

  CoarseLevel result;
  result.level = level;
  result.coarse_of.assign(n, kInvalidNode);
  NodeID next = 0;
  for (NodeID v = 0; v < n; ++v) {
    if (result.coarse_of[v] == kInvalidNode) {
      result.coarse_of[v] = next;
      result.coarse_of[partner[v]] = next;
      ++next;
    }
  }

  HypergraphBuilder builder(next, 0);
  std::vector<Weight> weights(next, 0);
  for (NodeID v = 0; v < n; ++v) {
    weights[result.coarse_of[v]] += h.node_weight(v);
  }
  for (NodeID c = 0; c < next; ++c) {
    builder.set_node_weight(c, weights[c]);
  }
  std::vector<NodeID> pins;
  for (NetID e = 0; e < h.num_nets(); ++e) {
    pins.clear();
    for (const NodeID p : h.pins(e)) {
      pins.push_back(result.coarse_of[p]);
    }
    builder.add_net(pins, h.net_weight(e));
  }
  result.hypergraph = std::move(builder).build(true);
  return result;
}

std::vector<BlockID> project(const CoarseLevel &level, std::span<const BlockID> coarse_blocks) {
  std::vector<BlockID> fine(level.coarse_of.size());
  for (std::size_t v = 0; v < fine.size(); ++v) {
    fine[v] = coarse_blocks[level.coarse_of[v]];
  }
  return fine;
}

namespace {

Weight block_weight(const Hypergraph &h, const std::vector<BlockID> &blocks, BlockID b) {
  Weight w = 0;
  for (NodeID v = 0; v < h.n(); ++v) {
    if (blocks[v] == b) {
      w += h.node_weight(v);
    }
  }
  return w;
}

Weight cut_of(const Hypergraph &h, const std::vector<BlockID> &blocks) {
  Bipartition p;
  p.block = blocks;
  return cut_net(h, p);
}

// Amount by which the blocks exceed max_block.
Weight excess(const Weight bw[2], Weight max_block) {
  return std::max<Weight>(0, bw[0] - max_block) + std::max<Weight>(0, bw[1] - max_block);
}

class FMRefiner {
public:
  FMRefiner(const Hypergraph &h, std::vector<BlockID> &blocks, Weight max_block)
      : _h(h),
        _blocks(blocks),
        _max_block(max_block),
        _pin_count(2 * h.num_nets(), 0),
        _gain(h.n(), 0),
        _locked(h.n(), 0) {
    for (NetID e = 0; e < h.num_nets(); ++e) {
      for (const NodeID p : h.pins(e)) {
        ++_pin_count[2 * e + _blocks[p]];
      }
    }
    for (NodeID v = 0; v < h.n(); ++v) {
      _bw[_blocks[v]] += h.node_weight(v);
    }
    _cut = cut_of(h, blocks);
  }

  Weight run(unsigned max_passes) {
    for (unsigned pass = 0; pass < max_passes; ++pass) {
      if (!run_pass()) {
        break;
      }
    }
    return _cut;
  }

private:
  Weight pc(NetID e, BlockID b) const { return _pin_count[2 * e + b]; }

  Weight compute_gain(NodeID v) const {
    const BlockID from = _blocks[v];
    const BlockID to = 1 - from;
    Weight g = 0;
    for (const NetID e : _h.incident_nets(v)) {
      g += _h.net_weight(e) * ((pc(e, from) == 1 ? 1 : 0) - (pc(e, to) == 0 ? 1 : 0));
    }
    return g;
  }

  bool movable(NodeID v) const {
    const BlockID from = _blocks[v];
    const BlockID to = 1 - from;
    const Weight c = _h.node_weight(v);
    if (_bw[from] - c <= 0) {
      return false;
    }
    if (_bw[to] + c <= _max_block) {
      return true;
    }
    // rebalancing move out of an overloaded block
    return _bw[from] > _max_block && _bw[to] + c < _bw[from];
  }

  void push(NodeID v) { _queue[_blocks[v]].push({_gain[v], v}); }

  void move(NodeID v) {
    const BlockID from = _blocks[v];
    const BlockID to = 1 - from;
    _cut -= _gain[v];
    for (const NetID e : _h.incident_nets(v)) {
      const Weight w = _h.net_weight(e);
      const Weight pf = pc(e, from);
      const Weight pt = pc(e, to);
      const Weight delta_from = w * ((pf == 2 ? 1 : 0) + (pt == 0 ? 1 : 0));
      const Weight delta_to = -w * ((pf == 1 ? 1 : 0) + (pt == 1 ? 1 : 0));
      if (delta_from != 0 || delta_to != 0) {
        for (const NodeID u : _h.pins(e)) {
          if (u == v) {
            continue;
          }
          const Weight d = _blocks[u] == from ? delta_from : delta_to;
          if (d != 0) {
            _gain[u] += d;
            if (!_locked[u]) {
              push(u);
            }
          }
        }
      }
      --_pin_count[2 * e + from];
      ++_pin_count[2 * e + to];
    }
    _gain[v] = -_gain[v];
    _blocks[v] = to;
    _bw[from] -= _h.node_weight(v);
    _bw[to] += _h.node_weight(v);
  }

  // Pops stale entries; returns the current top of block b or kInvalidNode.
  NodeID top(BlockID b) {
    auto &q = _queue[b];
    while (!q.empty()) {
      const auto [g, v] = q.top();
      if (_locked[v] || _blocks[v] != b || _gain[v] != g) {
        q.pop();
        continue;
      }
      return v;
    }
    return kInvalidNode;
  }

  bool run_pass() {
    const NodeID n = _h.n();
    for (auto &q : _queue) {
      q = {};
    }
    std::fill(_locked.begin(), _locked.end(), 0);
    for (NodeID v = 0; v < n; ++v) {
      _gain[v] = compute_gain(v);
    }
    for (NetID e = 0; e < _h.num_nets(); ++e) {
      if (pc(e, 0) > 0 && pc(e, 1) > 0) {
        for (const NodeID u : _h.pins(e)) {
          if (!_locked[u]) {
            _locked[u] = 2; // marks "already queued" during seeding
            push(u);
          }
        }
      }
    }
    std::fill(_locked.begin(), _locked.end(), 0);
    if (excess(_bw, _max_block) > 0) {
      // an overloaded block must be drained even without cut nets
      for (NodeID v = 0; v < n; ++v) {
        if (_bw[_blocks[v]] > _max_block) {
          push(v);
        }
      }
    }

    const Weight start_cut = _cut;
    const Weight start_excess = excess(_bw, _max_block);
    Weight best_cut = _cut;
    Weight best_excess = start_excess;
    std::size_t best_prefix = 0;
    std::vector<NodeID> moves;
    const std::size_t stop_after = std::max<std::size_t>(100, n / 10);

    while (true) {
      NodeID candidate = kInvalidNode;
      for (BlockID b = 0; b < 2; ++b) {
        NodeID v = top(b);
        // infeasible tops are dropped for this pass
        while (v != kInvalidNode && !movable(v)) {
          _locked[v] = 1;
          _queue[b].pop();
          v = top(b);
        }
        if (v == kInvalidNode) {
          continue;
        }
        if (candidate == kInvalidNode || _gain[v] > _gain[candidate] ||
            (_gain[v] == _gain[candidate] && _bw[b] > _bw[_blocks[candidate]])) {
          candidate = v;
        }
      }
      if (candidate == kInvalidNode) {
        break;
      }
      _locked[candidate] = 1;
      move(candidate);
      moves.push_back(candidate);

      const Weight ex = excess(_bw, _max_block);
      if (ex < best_excess || (ex == best_excess && _cut < best_cut)) {
        best_excess = ex;
        best_cut = _cut;
        best_prefix = moves.size();
      } else if (moves.size() - best_prefix > stop_after) {
        break;
      }
    }

    while (moves.size() > best_prefix) {
      const NodeID v = moves.back();
      moves.pop_back();
      move_back(v);
    }
    _cut = best_cut;
    return best_cut < start_cut || best_excess < start_excess;
  }

  // Undo without gain maintenance; gains are recomputed at the next pass.
  void move_back(NodeID v) {
    const BlockID from = _blocks[v];
    const BlockID to = 1 - from;
    for (const NetID e : _h.incident_nets(v)) {
      --_pin_count[2 * e + from];
      ++_pin_count[2 * e + to];
    }
    _blocks[v] = to;
    _bw[from] -= _h.node_weight(v);
    _bw[to] += _h.node_weight(v);
  }

  const Hypergraph &_h;
  std::vector<BlockID> &_blocks;
  Weight _max_block;
  std::vector<Weight> _pin_count;
  std::vector<Weight> _gain;
  std::vector<std::uint8_t> _locked;
  Weight _bw[2] = {0, 0};
  Weight _cut = 0;
  std::priority_queue<std::pair<Weight, NodeID>> _queue[2];
};

} // namespace

Weight fm_refine(const Hypergraph &h, std::vector<BlockID> &blocks, Weight max_block,
                 unsigned max_passes) {
  FMRefiner refiner(h, blocks, max_block);
  return refiner.run(max_passes);
}

namespace {

std::vector<BlockID> grow_region(const Hypergraph &h, Weight max_block, Rng &rng) {
  const NodeID n = h.n();
  const Weight total = h.total_node_weight();
  const Weight target = total / 2;
  std::vector<BlockID> blocks(n, 1);
  std::vector<std::uint8_t> seen(n, 0);
  std::queue<NodeID> queue;
  Weight w0 = 0;
  NodeID assigned = 0;

  const NodeID offset = static_cast<NodeID>(uniform_below(rng, n));
  NodeID scan = 0;
  auto next_unseen = [&]() -> NodeID {
    while (scan < n) {
      const NodeID v = (offset + scan++) % n;
      if (!seen[v]) {
        return v;
      }
    }
    return kInvalidNode;
  };

  while (w0 < target && assigned + 1 < n) {
    if (queue.empty()) {
      const NodeID s = next_unseen();
      if (s == kInvalidNode) {
        break;
      }
      seen[s] = 1;
      queue.push(s);
    }
    const NodeID v = queue.front();
    queue.pop();
    if (w0 + h.node_weight(v) > max_block) {
      continue;
    }
    blocks[v] = 0;
    w0 += h.node_weight(v);
    ++assigned;
    for (const NetID e : h.incident_nets(v)) {
      for (const NodeID u : h.pins(e)) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push(u);
        }
      }
    }
  }
  if (assigned == 0) {
    blocks[offset] = 0;
  }
  return blocks;
}

} // namespace

std::vector<BlockID> initial_partition(const Hypergraph &h, Weight max_block, unsigned tries,
                                       unsigned fm_passes, Rng &rng) {
  const NodeID n = h.n();
  if (n < 2) {
    throw std::invalid_argument("initial_partition: need at least two nodes");
  }
  std::vector<BlockID> best;
  Weight best_cut = 0;
  Weight best_excess = 0;
  for (unsigned attempt = 0; attempt < tries; ++attempt) {
    std::vector<BlockID> blocks = grow_region(h, max_block, rng);
    const Weight cut = fm_refine(h, blocks, max_block, fm_passes);
    const Weight bw[2] = {block_weight(h, blocks, 0), block_weight(h, blocks, 1)};
    const Weight ex = excess(bw, max_block);
    if (best.empty() || ex < best_excess || (ex == best_excess && cut < best_cut)) {
      best = std::move(blocks);
      best_cut = cut;
      best_excess = ex;
    }
  }
  return best;
}

} // namespace multilevel

Hypergraph partition_view(const MotifModel &model) {
  if (model.kind == ModelKind::hypergraph) {
    HypergraphBuilder builder(model.n());
    const Hypergraph &h = model.hypergraph;
    for (NetID e = 0; e < h.num_nets(); ++e) {
      builder.add_net(h.pins(e), h.net_weight(e));
    }
    return std::move(builder).build(false);
  }
  HypergraphBuilder builder(model.n());
  const Graph &g = model.graph;
  for (NodeID u = 0; u < g.n(); ++u) {
    const auto nbrs = g.neighbors(u);
    const auto weights = g.incident_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (u < nbrs[i]) {
        const NodeID pins[2] = {u, nbrs[i]};
        builder.add_net(pins, weights[i]);
      }
    }
  }
  return std::move(builder).build(false);
}

Bipartition bipartition(const Hypergraph &h, const PartitionerConfig &cfg) {
  cfg.validate();
  if (h.n() < 2) {
    throw std::invalid_argument("bipartition: need at least two nodes");
  }
  Rng rng(cfg.rng_seed);
  const Weight total = h.total_node_weight();
  const Weight max_block = max_block_weight(total, cfg.epsilon);
  const Weight slack = max_block - (total + 1) / 2;
  const Weight max_node_weight = std::max<Weight>(
      1, std::min<Weight>(static_cast<Weight>(std::ceil(1.5 * static_cast<double>(total) /
                                                        static_cast<double>(cfg.coarsening_limit))),
                          slack));

  std::vector<multilevel::CoarseLevel> levels;
  const Hypergraph *current = &h;
  while (current->n() > cfg.coarsening_limit) {
    multilevel::CoarseLevel next =
        multilevel::coarsen(*current, max_node_weight, rng, static_cast<unsigned>(levels.size()));
    if (next.hypergraph.n() * 20 > current->n() * 19 || next.hypergraph.n() < 2) {
      break;
    }
    levels.push_back(std::move(next));
    current = &levels.back().hypergraph;
  }

  std::vector<BlockID> blocks =
      multilevel::initial_partition(*current, max_block, cfg.init_tries, cfg.fm_max_passes, rng);
  for (std::size_t i = levels.size(); i-- > 0;) {
    blocks = multilevel::project(levels[i], blocks);
    const Hypergraph &finer = i == 0 ? h : levels[i - 1].hypergraph;
    multilevel::fm_refine(finer, blocks, max_block, cfg.fm_max_passes);
  }

  Bipartition p;
  p.block = std::move(blocks);
  p.epsilon = cfg.epsilon;
  p.cut_value = cut_net(h, p);
  return p;
}

Bipartition bipartition(const MotifModel &model, const PartitionerConfig &cfg) {
  const Hypergraph view = partition_view(model);
  return bipartition(view, cfg);
}

bool is_consistent(const MotifModel &model, const Bipartition &p) {
  return p.block.at(model.seed_local) != p.block.at(model.t_local);
}

Bipartition enforce_consistency(const MotifModel &model, Bipartition p) {
  if (!is_consistent(model, p)) {
    p.block[model.seed_local] = 1 - p.block[model.t_local];
  }
  p.cut_value = model.kind == ModelKind::graph ? edge_cut(model.graph, p) : cut_net(model.hypergraph, p);
  return p;
}

} // namespace lmc
