#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lmc/appr.h"
#include "lmc/cluster.h"
#include "lmc/graph.h"

namespace lmc::bench {

inline constexpr const char *kOurs = "ours";
inline constexpr const char *kBaseline = "appr";

// One line of benchmark output.
struct Record {
  std::string graph;
  std::string algo;
  NodeID seed = 0;
  double phi_mu = 1.0;
  std::size_t cluster_size = 0;
  std::optional<double> time_ms;
  bool degenerate = true;
  std::optional<std::vector<std::uint64_t>> cluster;
  // ours: conductance as evaluated inside the local model
  std::optional<double> phi_mu_model;
  // baseline: global motif-graph construction, total and per seed
  std::optional<double> preprocess_ms;
  std::optional<double> amortized_ms;
};

[[nodiscard]] nlohmann::json to_json(const Record &r);
[[nodiscard]] Record record_from_json(const nlohmann::json &j);

struct OutputOptions {
  bool emit_members = false;
  bool omit_timings = false;
  // Report node labels from the input file instead of dense IDs.
  bool original_ids = false;
};

// Record for a single run of the local clustering algorithm.
[[nodiscard]] Record make_record(const Graph &g, const std::string &graph_name, const std::string &algo,
                                 const ClusterResult &result, double time_ms, const OutputOptions &out);

// k distinct seeds drawn uniformly from [0, n) (Floyd's algorithm).
[[nodiscard]] std::vector<NodeID> draw_seeds(NodeID n, std::size_t k, std::uint64_t rng_seed);

struct BenchConfig {
  ClusterConfig cluster;
  ApprConfig appr;
  std::size_t seeds_count = 50;
  std::uint64_t rng_seed = 0;
  unsigned threads = 1;
  OutputOptions output;
};

struct AlgoSummary {
  std::size_t count = 0;
  std::size_t degenerate = 0;
  double mean_phi_mu = 0.0;
  std::optional<double> geomean_time_ms;
  double geomean_cluster_size = 0.0;
};

// Arithmetic mean for motif conductance, geometric mean for time and size.
[[nodiscard]] std::map<std::string, AlgoSummary> summarize(const std::vector<Record> &records);
[[nodiscard]] nlohmann::json to_json(const std::map<std::string, AlgoSummary> &summary);

// Runs both algorithms on the same seed list. Records are ordered by seed
// position, ours before the baseline. The baseline's time_ms includes the
// construction of W; preprocess_ms and amortized_ms break it down. Every
// cluster's phi_mu is the global motif conductance of the cluster.
[[nodiscard]] std::vector<Record> run_bench(const Graph &g, const std::string &graph_name,
                                            const BenchConfig &cfg);

// Reads records (one JSON object per line); summary lines are skipped.
[[nodiscard]] std::vector<Record> read_records(std::istream &in);

// Fraction of instances on which an algorithm is within a factor tau of the
// best algorithm for that instance, as a step function: (tau, fraction) at
// every distinct finite ratio, starting at tau = 1.
using ProfileCurve = std::vector<std::pair<double, double>>;

enum class ProfileMetric { phi_mu, time_ms };

[[nodiscard]] std::map<std::string, ProfileCurve> performance_profile(const std::vector<Record> &records,
                                                                      ProfileMetric metric);

} // namespace lmc::bench
