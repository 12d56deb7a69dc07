// Command-line front end: single-seed clustering, seed benchmarks against the
// APPR baseline, and performance profiles over benchmark records.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "lmc/ball.h"
#include "lmc/bench.h"
#include "lmc/cluster.h"
#include "lmc/io.h"
#include "lmc/model.h"
#include "lmc/motif.h"

namespace {

using namespace lmc;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

// Errors that map to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphOptions {
  std::string path;
  std::string format = "auto";
};

struct AlgoOptions {
  std::string model = "graph";
  unsigned alpha = 3;
  unsigned beta = 80;
  double eps_lo = 0.05;
  double eps_hi = 0.90;
  unsigned lp_rounds = 3;
  double time_limit = 3600.0;
  std::uint64_t rng_seed = 0;
};

struct OutputFlags {
  std::string out;
  bool emit_members = false;
  bool omit_timings = false;
  bool original_ids = false;
};

void add_graph_options(CLI::App *cmd, GraphOptions &opts) {
  cmd->add_option("--graph", opts.path, "Input graph file")->required();
  cmd->add_option("--format", opts.format, "Input format")
      ->check(CLI::IsMember({"auto", "metis", "edgelist"}));
}

void add_algo_options(CLI::App *cmd, AlgoOptions &opts) {
  cmd->add_option("--model", opts.model, "Model kind")->check(CLI::IsMember({"graph", "hypergraph"}));
  cmd->add_option("--alpha", opts.alpha, "Ball repetitions")->check(CLI::PositiveNumber);
  cmd->add_option("--beta", opts.beta, "Partitionings per ball")->check(CLI::PositiveNumber);
  cmd->add_option("--eps-lo", opts.eps_lo, "Lower end of the imbalance range")->check(CLI::PositiveNumber);
  cmd->add_option("--eps-hi", opts.eps_hi, "Upper end of the imbalance range")->check(CLI::PositiveNumber);
  cmd->add_option("--lp-rounds", opts.lp_rounds, "Label propagation rounds (0 disables)");
  cmd->add_option("--time-limit", opts.time_limit, "Per-seed time limit in seconds")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rng-seed", opts.rng_seed, "Random seed");
}

void add_output_options(CLI::App *cmd, OutputFlags &opts) {
  cmd->add_option("--out", opts.out, "Output file (default: stdout)");
  cmd->add_flag("--emit-members", opts.emit_members, "Include cluster members in records");
  cmd->add_flag("--omit-timings", opts.omit_timings, "Leave timing fields out of records");
  cmd->add_flag("--original-ids", opts.original_ids, "Report node labels from the input file");
}

GraphFormat resolve_format(const GraphOptions &opts) {
  if (opts.format != "auto") {
    return parse_graph_format(opts.format);
  }
  const std::string ext = std::filesystem::path(opts.path).extension().string();
  return ext == ".metis" || ext == ".graph" ? GraphFormat::metis : GraphFormat::edgelist;
}

Graph load(const GraphOptions &opts) {
  if (!std::filesystem::exists(opts.path)) {
    throw DomainError("graph file '" + opts.path + "' not found");
  }
  return load_graph(opts.path, resolve_format(opts));
}

std::string graph_name(const GraphOptions &opts) {
  return std::filesystem::path(opts.path).stem().string();
}

ClusterConfig make_cluster_config(const AlgoOptions &opts) {
  ClusterConfig cfg;
  cfg.reps_alpha = opts.alpha;
  cfg.beta = opts.beta;
  cfg.model_kind = parse_model_kind(opts.model);
  cfg.epsilon_lo = opts.eps_lo;
  cfg.epsilon_hi = opts.eps_hi;
  cfg.lp_max_rounds = opts.lp_rounds;
  cfg.time_limit_s = opts.time_limit;
  cfg.rng_seed = opts.rng_seed;
  cfg.validate();
  return cfg;
}

bench::OutputOptions make_output_options(const OutputFlags &flags) {
  return {flags.emit_members, flags.omit_timings, flags.original_ids};
}

class Output {
public:
  explicit Output(const std::string &path) {
    if (!path.empty()) {
      _file.open(path);
      if (!_file) {
        throw DomainError("cannot write '" + path + "'");
      }
    }
  }
  std::ostream &stream() { return _file.is_open() ? _file : std::cout; }

private:
  std::ofstream _file;
};

int run_cluster(const GraphOptions &gopts, const AlgoOptions &aopts, const OutputFlags &oflags,
                std::optional<std::uint64_t> seed, const std::string &dump_model) {
  const ClusterConfig cfg = make_cluster_config(aopts);
  const Graph g = load(gopts);
  if (!seed || *seed >= g.n()) {
    throw DomainError("seed out of range (graph has " + std::to_string(g.n()) + " nodes)");
  }
  const auto u = static_cast<NodeID>(*seed);

  if (!dump_model.empty()) {
    const Ball ball = grow_ball(g, u, cfg.first_layers, cfg.reps_alpha == 1
                                                            ? std::optional(cfg.min_ball_size)
                                                            : std::nullopt);
    std::vector<std::uint8_t> in_s(ball.hood.graph.n(), 0);
    std::fill(in_s.begin(), in_s.begin() + ball.size(), 1);
    const MotifModel model = build_model(cfg.model_kind, g, ball, enumerate_triangles(ball.hood.graph, in_s));
    std::ofstream out(dump_model);
    if (!out) {
      throw DomainError("cannot write '" + dump_model + "'");
    }
    write_model(model, out);
  }

  const auto start = std::chrono::steady_clock::now();
  const ClusterResult result = local_motif_cluster(g, u, cfg);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const bench::Record record =
      bench::make_record(g, graph_name(gopts), bench::kOurs, result, ms, make_output_options(oflags));
  Output out(oflags.out);
  out.stream() << bench::to_json(record).dump() << '\n';
  return kExitOk;
}

int run_bench(const GraphOptions &gopts, const AlgoOptions &aopts, const OutputFlags &oflags,
              std::size_t seeds_count, unsigned threads) {
  bench::BenchConfig cfg;
  cfg.cluster = make_cluster_config(aopts);
  cfg.seeds_count = seeds_count;
  cfg.rng_seed = aopts.rng_seed;
  cfg.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  cfg.output = make_output_options(oflags);

  const Graph g = load(gopts);
  if (seeds_count > g.n()) {
    throw DomainError("seeds count exceeds node count");
  }
  const std::vector<bench::Record> records = bench::run_bench(g, graph_name(gopts), cfg);

  Output out(oflags.out);
  for (const bench::Record &r : records) {
    out.stream() << bench::to_json(r).dump() << '\n';
  }
  nlohmann::json summary;
  summary["summary"] = bench::to_json(bench::summarize(records));
  out.stream() << summary.dump() << '\n';
  return kExitOk;
}

int run_profile(const std::string &records_path, const std::string &out_path) {
  std::ifstream in(records_path);
  if (!in) {
    throw DomainError("cannot open '" + records_path + "'");
  }
  const std::vector<bench::Record> records = bench::read_records(in);
  if (records.empty()) {
    throw DomainError("no records in '" + records_path + "'");
  }

  nlohmann::json result;
  result["summary"] = bench::to_json(bench::summarize(records));
  auto curves_json = [](const std::map<std::string, bench::ProfileCurve> &curves) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto &[algo, curve] : curves) {
      nlohmann::json points = nlohmann::json::array();
      for (const auto &[tau, fraction] : curve) {
        points.push_back({tau, fraction});
      }
      j[algo] = points;
    }
    return j;
  };
  result["profiles"]["phi_mu"] = curves_json(bench::performance_profile(records, bench::ProfileMetric::phi_mu));
  const bool timed = std::all_of(records.begin(), records.end(), [](const auto &r) { return r.time_ms.has_value(); });
  if (timed) {
    result["profiles"]["time_ms"] = curves_json(bench::performance_profile(records, bench::ProfileMetric::time_ms));
  }
  Output out(out_path);
  out.stream() << result.dump(2) << '\n';
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Local motif clustering around seed nodes"};
  app.require_subcommand(1);

  GraphOptions gopts;
  AlgoOptions aopts;
  OutputFlags oflags;

  auto *cluster = app.add_subcommand("cluster", "Compute a local motif cluster for one seed");
  std::optional<std::uint64_t> seed;
  std::string dump_model;
  add_graph_options(cluster, gopts);
  add_algo_options(cluster, aopts);
  add_output_options(cluster, oflags);
  cluster->add_option("--seed", seed, "Seed node (0-based)")->required();
  cluster->add_option("--dump-model", dump_model, "Write the first ball's model (METIS/hMETIS)");

  auto *bench = app.add_subcommand("bench", "Run both algorithms on random seeds");
  std::size_t seeds_count = 50;
  unsigned threads = 0;
  GraphOptions bench_gopts;
  AlgoOptions bench_aopts;
  OutputFlags bench_oflags;
  add_graph_options(bench, bench_gopts);
  add_algo_options(bench, bench_aopts);
  add_output_options(bench, bench_oflags);
  bench->add_option("--seeds-count", seeds_count, "Number of random seeds")->check(CLI::PositiveNumber);
  bench->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto *profile = app.add_subcommand("profile", "Performance profiles from benchmark records");
  std::string records_path;
  std::string profile_out;
  profile->add_option("records", records_path, "Records file written by bench")->required();
  profile->add_option("--out", profile_out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cluster) {
      return run_cluster(gopts, aopts, oflags, seed, dump_model);
    }
    if (*bench) {
      return run_bench(bench_gopts, bench_aopts, bench_oflags, seeds_count, threads);
    }
    return run_profile(records_path, profile_out);
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
