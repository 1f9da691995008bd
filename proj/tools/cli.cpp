#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <random>
#include <vector>

#include "CLI11.hpp"
#include "dsssp/delta_stepping.hpp"
#include "dsssp/random_graph.hpp"
#include "dsssp/verify.hpp"

namespace dsssp::cli {
namespace {

constexpr Weight kVerifyTolerance = 1e-9;

std::string format_weight(Weight w) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), w);
  return std::string(buf, ptr);
}

const char* backend_name(Backend b) {
  return b == Backend::kFused ? "fused" : "unfused";
}

// Adds 1.0 to the last stored distance.
SparseVector perturb(const SparseVector& d) {
  std::vector<Index> idx(d.indices().begin(), d.indices().end());
  std::vector<Weight> val(d.values().begin(), d.values().end());
  if (!val.empty()) val.back() += 1.0;
  return SparseVector::from_sorted(d.length(), std::move(idx), std::move(val));
}

std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  if (v.size() % 2 == 1) return v[m];
  return (v[m - 1] + v[m]) / 2;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!(config.delta > 0.0) || config.repeat == 0 || config.execution.workers == 0 ||
      config.execution.chunks_per_worker == 0) {
    err << "error: delta must be > 0; repeat, workers and chunks must be >= 1\n";
    return kBadFlags;
  }

  LoadedGraph graph;
  try {
    LoadOptions options;
    options.directed = config.directed;
    graph = load_graph(config.graph, config.format, options);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kLoadError;
  }
  if (graph.self_loops_dropped > 0) {
    err << "warning: dropped " << graph.self_loops_dropped << " self-loop(s)\n";
  }

  auto source = graph.labels.find(config.source);
  if (!source) {
    err << "error: source vertex " << config.source << " does not occur in the graph\n";
    return kBadFlags;
  }

  DeltaSteppingOptions options;
  options.execution = config.execution;
  options.skip_empty_buckets = config.skip_empty_buckets;
  std::vector<std::chrono::nanoseconds> times;
  SsspResult result;
  for (unsigned r = 0; r < config.repeat; ++r) {
    result = delta_stepping(graph.matrix, *source, config.delta, options);
    times.push_back(result.elapsed);
  }
  if (config.inject_fault) result.distances = perturb(result.distances);

  int status = kOk;
  std::optional<DistanceComparison> check;
  if (config.verify) {
    check = compare_distances(result.distances, dijkstra_oracle(graph.matrix, *source),
                              kVerifyTolerance);
    if (!check->ok) status = kVerifyFailed;
  }

  std::vector<std::pair<std::uint64_t, Weight>> rows;
  rows.reserve(result.distances.nnz());
  for (const Entry& e : result.distances.entries()) {
    rows.emplace_back(graph.labels.label_of(e.index), e.value);
  }
  std::sort(rows.begin(), rows.end());

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty() && config.output != "-") {
    file.open(config.output);
    if (!file) {
      err << "error: cannot write '" << config.output << "'\n";
      return kLoadError;
    }
    sink = &file;
  }
  for (const auto& [label, dist] : rows) *sink << label << '\t' << format_weight(dist) << '\n';
  sink->flush();

  const double ms = std::chrono::duration<double, std::milli>(median(times)).count();
  err << "n: " << graph.matrix.size() << "\n"
      << "m: " << graph.matrix.nnz() << "\n"
      << "delta: " << format_weight(config.delta) << "\n"
      << "backend: " << backend_name(config.execution.backend) << "\n"
      << "workers: " << config.execution.workers << "\n"
      << "outer_iterations: " << result.outer_iterations << "\n"
      << "inner_phases: " << result.inner_phases << "\n"
      << "median_ms: " << ms << " (" << config.repeat << " repeat(s))\n";
  if (check) {
    err << "verify: " << (check->ok ? "ok" : "MISMATCH")
        << " max_abs_deviation=" << format_weight(check->max_abs_deviation)
        << " reachability_mismatches=" << check->reachability_mismatches
        << " value_mismatches=" << check->value_mismatches << "\n";
  }
  return status;
}

int selftest(const SelftestConfig& config, std::ostream& out, std::ostream& err) {
  if (config.cases == 0) {
    err << "warning: --cases 0, nothing was tested\n";
    out << "selftest: 0 cases (seed " << config.seed << ")\n";
    return kOk;
  }
  constexpr Weight kDeltas[] = {0.5, 1.0, 3.0, 11.0};
  for (std::size_t k = 0; k < config.cases; ++k) {
    const std::uint64_t seed = config.seed + k;
    std::mt19937_64 rng(seed);
    RandomGraphSpec spec;
    spec.vertices = std::uniform_int_distribution<Index>(1, 200)(rng);
    spec.edges = std::uniform_int_distribution<std::size_t>(0, 2000)(rng);
    spec.weights = k % 2 == 0 ? WeightKind::kInteger : WeightKind::kReal;
    SparseMatrix a = random_graph(spec, seed);
    const Index s = std::uniform_int_distribution<Index>(0, spec.vertices - 1)(rng);
    const SparseVector want = dijkstra_oracle(a, s);
    const Weight tol = spec.weights == WeightKind::kInteger ? 0.0 : kVerifyTolerance;

    for (Weight delta : kDeltas) {
      for (Backend backend : {Backend::kUnfused, Backend::kFused}) {
        DeltaSteppingOptions options;
        options.execution.backend = backend;
        options.execution.workers = backend == Backend::kFused ? 2 : 1;
        SsspResult got = delta_stepping(a, s, delta, options);
        if (config.inject_fault && k == 0) got.distances = perturb(got.distances);
        DistanceComparison c = compare_distances(got.distances, want, tol);
        if (!c.ok) {
          err << "selftest: FAIL seed=" << seed << " n=" << spec.vertices
              << " m=" << a.nnz() << " source=" << s << " delta=" << format_weight(delta)
              << " backend=" << backend_name(backend)
              << " max_abs_deviation=" << format_weight(c.max_abs_deviation) << "\n";
          return kVerifyFailed;
        }
      }
    }
  }
  out << "selftest: " << config.cases << " cases passed (seeds " << config.seed << ".."
      << config.seed + config.cases - 1 << ")\n";
  return kOk;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear-algebraic delta-stepping SSSP driver"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string format;
  std::string backend = "unfused";
  CLI::App* run_cmd = app.add_subcommand("run", "Load a graph and compute distances");
  run_cmd->add_option("--graph", rc.graph, "Graph file, '-' for standard input")->required();
  run_cmd->add_option("--format", format, "mtx or edges (default: by extension)")
      ->check(CLI::IsMember({"mtx", "edges"}));
  run_cmd->add_flag("--directed", rc.directed, "Edge lists: keep edges one-way");
  run_cmd->add_option("--source", rc.source, "Source vertex label")->required();
  run_cmd->add_option("--delta", rc.delta, "Bucket width")->check(CLI::PositiveNumber);
  run_cmd->add_option("--backend", backend, "Kernel backend")->check(CLI::IsMember({"unfused", "fused"}));
  run_cmd->add_option("--workers", rc.execution.workers, "Fused backend worker count")->check(CLI::Range(1u, 1024u));
  run_cmd->add_option("--chunks-per-worker", rc.execution.chunks_per_worker,
                      "Index ranges per worker")
      ->check(CLI::Range(1u, 1u << 16));
  run_cmd->add_flag("--verify", rc.verify, "Compare with Dijkstra");
  run_cmd->add_option("--repeat", rc.repeat, "Timing repetitions")->check(CLI::Range(1u, 1u << 20));
  run_cmd->add_flag("--skip-empty-buckets", rc.skip_empty_buckets,
                    "Jump over buckets holding no distance");
  run_cmd->add_option("--output", rc.output, "Distance file (default: stdout)");
  run_cmd->add_flag("--inject-fault", rc.inject_fault)->group("");

  SelftestConfig sc;
  CLI::App* self_cmd = app.add_subcommand("selftest", "Randomized check against Dijkstra");
  self_cmd->add_option("--seed", sc.seed, "First random seed");
  self_cmd->add_option("--cases", sc.cases, "Number of random graphs");
  self_cmd->add_flag("--inject-fault", sc.inject_fault)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadFlags;
  }

  if (*run_cmd) {
    if (format.empty()) {
      const std::string& g = rc.graph;
      format = g.size() >= 4 && g.compare(g.size() - 4, 4, ".mtx") == 0 ? "mtx" : "edges";
    }
    rc.format = format == "mtx" ? GraphFormat::kMatrixMarket : GraphFormat::kEdgeList;
    rc.execution.backend = backend == "fused" ? Backend::kFused : Backend::kUnfused;
    return run(rc, out, err);
  }
  return selftest(sc, out, err);
}

}  // namespace dsssp::cli
