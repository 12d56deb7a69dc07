#include "lmc/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "lmc/random.h"

namespace lmc::bench {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

nlohmann::json to_json(const Record &r) {
  nlohmann::json j;
  j["graph"] = r.graph;
  j["algo"] = r.algo;
  j["seed"] = r.seed;
  j["phi_mu"] = r.phi_mu;
  j["cluster_size"] = r.cluster_size;
  if (r.time_ms) {
    j["time_ms"] = *r.time_ms;
  }
  j["degenerate"] = r.degenerate;
  if (r.phi_mu_model) {
    j["phi_mu_model"] = *r.phi_mu_model;
  }
  if (r.preprocess_ms) {
    j["preprocess_ms"] = *r.preprocess_ms;
  }
  if (r.amortized_ms) {
    j["amortized_ms"] = *r.amortized_ms;
  }
  if (r.cluster) {
    j["cluster"] = *r.cluster;
  }
  return j;
}

Record record_from_json(const nlohmann::json &j) {
  Record r;
  r.graph = j.at("graph").get<std::string>();
  r.algo = j.at("algo").get<std::string>();
  r.seed = j.at("seed").get<NodeID>();
  r.phi_mu = j.at("phi_mu").get<double>();
  r.cluster_size = j.at("cluster_size").get<std::size_t>();
  r.degenerate = j.at("degenerate").get<bool>();
  if (j.contains("time_ms")) {
    r.time_ms = j["time_ms"].get<double>();
  }
  if (j.contains("phi_mu_model")) {
    r.phi_mu_model = j["phi_mu_model"].get<double>();
  }
  if (j.contains("preprocess_ms")) {
    r.preprocess_ms = j["preprocess_ms"].get<double>();
  }
  if (j.contains("amortized_ms")) {
    r.amortized_ms = j["amortized_ms"].get<double>();
  }
  if (j.contains("cluster")) {
    r.cluster = j["cluster"].get<std::vector<std::uint64_t>>();
  }
  return r;
}

Record make_record(const Graph &g, const std::string &graph_name, const std::string &algo,
                   const ClusterResult &result, double time_ms, const OutputOptions &out) {
  Record r;
  r.graph = graph_name;
  r.algo = algo;
  r.seed = result.seed;
  r.phi_mu = result.phi_mu;
  r.cluster_size = result.cluster.size();
  r.degenerate = result.degenerate;
  if (!out.omit_timings) {
    r.time_ms = time_ms;
  }
  if (out.emit_members) {
    std::vector<std::uint64_t> members;
    members.reserve(result.cluster.size());
    for (const NodeID v : result.cluster) {
      members.push_back(out.original_ids ? g.original_id(v) : v);
    }
    r.cluster = std::move(members);
  }
  return r;
}

std::vector<NodeID> draw_seeds(NodeID n, std::size_t k, std::uint64_t rng_seed) {
  if (k > n) {
    throw std::invalid_argument("draw_seeds: more seeds requested than nodes");
  }
  Rng rng(derive_seed(rng_seed, {0x5eedULL}));
  std::vector<NodeID> seeds;
  std::unordered_set<NodeID> chosen;
  for (std::uint64_t j = n - k; j < n; ++j) {
    const auto t = static_cast<NodeID>(uniform_below(rng, j + 1));
    const NodeID pick = chosen.contains(t) ? static_cast<NodeID>(j) : t;
    chosen.insert(pick);
    seeds.push_back(pick);
  }
  return seeds;
}

std::map<std::string, AlgoSummary> summarize(const std::vector<Record> &records) {
  std::map<std::string, AlgoSummary> summary;
  std::map<std::string, double> log_time;
  std::map<std::string, double> log_size;
  std::map<std::string, bool> all_timed;
  for (const Record &r : records) {
    AlgoSummary &s = summary[r.algo];
    if (!all_timed.contains(r.algo)) {
      all_timed[r.algo] = true;
    }
    ++s.count;
    s.degenerate += r.degenerate ? 1 : 0;
    s.mean_phi_mu += r.phi_mu;
    log_size[r.algo] += std::log(static_cast<double>(std::max<std::size_t>(r.cluster_size, 1)));
    if (r.time_ms) {
      log_time[r.algo] += std::log(std::max(*r.time_ms, 1e-6));
    } else {
      all_timed[r.algo] = false;
    }
  }
  for (auto &[algo, s] : summary) {
    const auto count = static_cast<double>(s.count);
    s.mean_phi_mu /= count;
    s.geomean_cluster_size = std::exp(log_size[algo] / count);
    if (all_timed[algo]) {
      s.geomean_time_ms = std::exp(log_time[algo] / count);
    }
  }
  return summary;
}

nlohmann::json to_json(const std::map<std::string, AlgoSummary> &summary) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto &[algo, s] : summary) {
    nlohmann::json entry;
    entry["count"] = s.count;
    entry["degenerate"] = s.degenerate;
    entry["mean_phi_mu"] = s.mean_phi_mu;
    entry["geomean_cluster_size"] = s.geomean_cluster_size;
    if (s.geomean_time_ms) {
      entry["geomean_time_ms"] = *s.geomean_time_ms;
    }
    j[algo] = entry;
  }
  return j;
}

std::vector<Record> run_bench(const Graph &g, const std::string &graph_name, const BenchConfig &cfg) {
  const std::vector<NodeID> seeds = draw_seeds(g.n(), cfg.seeds_count, cfg.rng_seed);

  const auto w_start = Clock::now();
  const WeightedMotifGraph w = build_W(g);
  const double w_ms = ms_since(w_start);

  std::vector<Record> records(2 * seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      const NodeID u = seeds[i];

      ClusterConfig ccfg = cfg.cluster;
      ccfg.rng_seed = derive_seed(cfg.rng_seed, {u});
      auto start = Clock::now();
      ClusterResult ours = local_motif_cluster(g, u, ccfg);
      const double ours_ms = ms_since(start);
      const double model_phi = ours.phi_mu;
      if (!ours.degenerate) {
        const MotifConductanceValue global = global_motif_conductance(w, ours.cluster);
        ours.phi_mu = global.value;
        ours.degenerate = global.degenerate;
      }
      Record r_ours = make_record(g, graph_name, kOurs, ours, ours_ms, cfg.output);
      r_ours.phi_mu_model = model_phi;
      records[2 * i] = std::move(r_ours);

      start = Clock::now();
      const ClusterResult base = appr_sweep(w, u, cfg.appr);
      const double sweep_ms = ms_since(start);
      Record r_base = make_record(g, graph_name, kBaseline, base, sweep_ms + w_ms, cfg.output);
      if (!cfg.output.omit_timings) {
        r_base.preprocess_ms = w_ms;
        r_base.amortized_ms = sweep_ms + w_ms / static_cast<double>(seeds.size());
      }
      records[2 * i + 1] = std::move(r_base);
    }
  };

  const unsigned threads = std::max(1u, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }
  return records;
}

std::vector<Record> read_records(std::istream &in) {
  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error &e) {
      throw std::runtime_error("records line " + std::to_string(line_no) + ": " + e.what());
    }
    if (j.contains("summary")) {
      continue;
    }
    records.push_back(record_from_json(j));
  }
  return records;
}

std::map<std::string, ProfileCurve> performance_profile(const std::vector<Record> &records,
                                                        ProfileMetric metric) {
  using Instance = std::pair<std::string, NodeID>;
  std::map<Instance, std::map<std::string, double>> values;
  std::set<std::string> algos;
  for (const Record &r : records) {
    double v;
    if (metric == ProfileMetric::phi_mu) {
      v = r.phi_mu;
    } else {
      if (!r.time_ms) {
        throw std::invalid_argument("performance_profile: record without time_ms");
      }
      v = *r.time_ms;
    }
    values[{r.graph, r.seed}][r.algo] = v;
    algos.insert(r.algo);
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::map<std::string, std::vector<double>> ratios;
  for (const auto &[instance, per_algo] : values) {
    double best = kInf;
    for (const auto &[algo, v] : per_algo) {
      best = std::min(best, v);
    }
    for (const std::string &algo : algos) {
      const auto it = per_algo.find(algo);
      double ratio = kInf;
      if (it != per_algo.end()) {
        if (it->second == best) {
          ratio = 1.0;
        } else if (best > 0.0) {
          ratio = it->second / best;
        }
      }
      ratios[algo].push_back(ratio);
    }
  }

  std::map<std::string, ProfileCurve> curves;
  const auto instances = static_cast<double>(values.size());
  for (auto &[algo, rs] : ratios) {
    std::sort(rs.begin(), rs.end());
    ProfileCurve curve;
    std::size_t i = 0;
    // fraction at tau = 1
    while (i < rs.size() && rs[i] <= 1.0) {
      ++i;
    }
    curve.emplace_back(1.0, static_cast<double>(i) / instances);
    while (i < rs.size() && rs[i] < kInf) {
      const double tau = rs[i];
      while (i < rs.size() && rs[i] == tau) {
        ++i;
      }
      curve.emplace_back(tau, static_cast<double>(i) / instances);
    }
    curves[algo] = std::move(curve);
  }
  return curves;
}

} // namespace lmc::bench
