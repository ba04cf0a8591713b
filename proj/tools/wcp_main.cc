// Command line front end: instance generation, solving, experiments and the
// planner HTTP service.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wcp/errors.h"
#include "wcp/experiment.h"
#include "wcp/generator.h"
#include "wcp/io.h"
#include "wcp/oracle.h"
#include "wcp/residual.h"
#include "wcp/service.h"
#include "wcp/solver.h"
#include "wcp/stats.h"

namespace fs = std::filesystem;

namespace {

// --seed wins over WCP_SEED, which wins over 0.
std::uint64_t ResolveSeed(const CLI::Option* flag, std::uint64_t value) {
  if (flag->count() > 0) return value;
  if (const char* env = std::getenv("WCP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw wcp::InputError(std::string("WCP_SEED is not a number: ") + env);
    }
  }
  return 0;
}

wcp::InitStrategy InitOrThrow(const std::string& name) {
  auto init = wcp::ParseInitStrategy(name);
  if (!init) throw wcp::InputError("unknown init strategy: " + name);
  return *init;
}

wcp::DeltaKind DeltaOrThrow(const std::string& name) {
  auto delta = wcp::ParseDeltaKind(name);
  if (!delta) throw wcp::InputError("unknown delta strategy: " + name);
  return *delta;
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    wcp::WriteTextFile(path, text);
  }
}

std::vector<fs::path> InstanceFiles(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> found;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.path().extension() == ".json") found.push_back(entry.path());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.emplace_back(input);
    }
  }
  return files;
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wcp::InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GenArgs {
  std::string size_class = "n1-like";
  std::int64_t divisor = 1;
  std::uint64_t seed = 0;
  int count = 1;
  std::int64_t turbines = 0;
  std::int64_t substations = 0;
  std::int64_t k = 8;
  bool complete = false;
  std::string out;
};

int RunGen(const GenArgs& args, const CLI::Option* seed_flag) {
  auto size_class = wcp::ParseSizeClass(args.size_class);
  if (!size_class) throw wcp::InputError("unknown size class: " + args.size_class);
  wcp::GeneratorSpec spec = wcp::DefaultGeneratorSpec(*size_class, args.divisor);
  if (args.turbines > 0) spec.min_turbines = spec.max_turbines = args.turbines;
  if (args.substations > 0) {
    spec.min_substations = spec.max_substations = args.substations;
  }
  spec.k = args.k;
  if (args.complete) spec.connectivity = wcp::Connectivity::kComplete;
  const std::uint64_t base = ResolveSeed(seed_flag, args.seed);
  if (args.count == 1) {
    spec.seed = base;
    Emit(args.out, wcp::InstanceToJson(wcp::Generate(spec)).dump(2) + "\n");
    return 0;
  }
  if (args.out.empty()) throw wcp::InputError("--count > 1 needs -o DIR");
  fs::create_directories(args.out);
  for (int i = 0; i < args.count; ++i) {
    spec.seed = base + static_cast<std::uint64_t>(i);
    const std::string name = std::string(wcp::SizeClassName(*size_class)) + "-" +
                             std::to_string(spec.seed) + ".json";
    wcp::SaveInstance(wcp::Generate(spec), fs::path(args.out) / name);
  }
  return 0;
}

struct SolveArgs {
  std::string instance;
  std::string init = "collecting-dijkstra-any";
  std::string delta = "inc-dec";
  std::uint64_t seed = 0;
  std::int64_t time_limit_ms = 0;
  std::int64_t max_iterations = 0;
  std::string trace;
  std::string dump_residual;
  std::int64_t dump_delta = 1;
  std::string out;
  bool verify = false;
};

int RunSolve(const SolveArgs& args, const CLI::Option* seed_flag) {
  const wcp::WindFarm farm = wcp::LoadInstance(args.instance);
  wcp::SolveOptions options;
  options.init = InitOrThrow(args.init);
  options.delta = DeltaOrThrow(args.delta);
  options.seed = ResolveSeed(seed_flag, args.seed);
  options.verify = args.verify;
  if (args.time_limit_ms > 0) {
    options.limits.time = std::chrono::milliseconds(args.time_limit_ms);
  }
  if (args.max_iterations > 0) options.limits.iterations = args.max_iterations;

  const wcp::Solution solution = wcp::Solve(farm, options);
  const auto solution_json =
      wcp::SolutionToJson(farm, solution.flow, solution.cost);
  if (!args.out.empty()) {
    wcp::WriteTextFile(args.out, solution_json.dump(2) + "\n");
  }
  if (!args.trace.empty()) wcp::WriteTextFile(args.trace, wcp::TraceCsv(solution));
  if (!args.dump_residual.empty()) {
    Emit(args.dump_residual,
         wcp::ResidualCsv(wcp::BuildResidual(farm, solution.flow, args.dump_delta)));
  }
  std::cerr << "init " << wcp::InitName(options.init) << ", delta "
            << wcp::DeltaName(options.delta) << ", seed " << options.seed << "\n"
            << "initial cost " << solution.initial_cost << ", final cost "
            << solution.cost << "\n"
            << solution.iterations << " iterations, " << solution.trace.size()
            << " cancellations, stop " << wcp::StopReasonName(solution.stop)
            << ", " << solution.wall_ms << " ms\n";
  if (args.out.empty()) std::cout << solution_json.dump(2) << "\n";
  return 0;
}

int RunOracle(const std::string& instance, const std::string& out) {
  const wcp::WindFarm farm = wcp::LoadInstance(instance);
  const wcp::OracleResult result = wcp::SolveExactly(farm);
  if (!result.feasible) {
    std::cerr << "no feasible flow\n";
    return 3;
  }
  nlohmann::json doc = wcp::SolutionToJson(farm, result.flow, result.cost);
  doc["proved_optimal"] = true;
  doc["nodes_visited"] = result.nodes_visited;
  Emit(out, doc.dump(2) + "\n");
  return 0;
}

struct BenchArgs {
  std::vector<std::string> inputs;
  std::vector<std::string> inits;
  std::vector<std::string> deltas;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::int64_t time_limit_ms = 0;
  std::string out;
  bool resume = false;
  bool omit_timing = false;
};

int RunBench(const BenchArgs& args, const CLI::Option* seed_flag) {
  wcp::ExperimentOptions options;
  options.seed = ResolveSeed(seed_flag, args.seed);
  options.jobs = args.jobs;
  if (args.time_limit_ms > 0) {
    options.limits.time = std::chrono::milliseconds(args.time_limit_ms);
  }
  std::vector<wcp::InitStrategy> inits;
  for (const auto& name : args.inits) inits.push_back(InitOrThrow(name));
  if (inits.empty()) inits = wcp::AllInitStrategies();
  std::vector<wcp::DeltaKind> deltas;
  for (const auto& name : args.deltas) deltas.push_back(DeltaOrThrow(name));
  if (deltas.empty()) deltas.assign(std::begin(wcp::kAllDeltaKinds),
                                    std::end(wcp::kAllDeltaKinds));
  for (const auto& init : inits) {
    for (wcp::DeltaKind delta : deltas) options.variants.push_back({init, delta});
  }

  bool append = false;
  if (args.resume && !args.out.empty() && fs::exists(args.out)) {
    for (const auto& row : wcp::ParseExperimentCsv(ReadText(args.out))) {
      options.skip.insert(row.instance);
    }
    append = true;
  }

  std::vector<wcp::NamedInstance> instances;
  for (const fs::path& file : InstanceFiles(args.inputs)) {
    instances.push_back({file.stem().string(), wcp::LoadInstance(file)});
  }

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!args.out.empty()) {
    file.open(args.out, append ? std::ios::app : std::ios::trunc);
    if (!file) throw wcp::InputError("cannot write " + args.out);
    out = &file;
  }
  if (!append) *out << wcp::ExperimentCsv({}, args.omit_timing);
  int failures = 0;
  wcp::RunExperiment(instances, options, [&](const wcp::ExperimentRow& row) {
    if (!row.cost) ++failures;
    *out << wcp::ExperimentCsv({row}, args.omit_timing, false);
    out->flush();
  });
  if (failures > 0) std::cerr << failures << " runs failed\n";
  return 0;
}

struct CompareArgs {
  std::string csv;
  std::string by = "delta";
  std::string fixed_delta = "inc-dec";
  std::int64_t correction = 112;
  std::string ratio_a;
  std::string ratio_b;
  std::string out;
};

int RunCompare(const CompareArgs& args) {
  const auto rows = wcp::ParseExperimentCsv(ReadText(args.csv));
  std::vector<std::string> instances;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    if (seen.insert(row.instance).second) instances.push_back(row.instance);
  }

  // Per-variant cost vectors over the instances every variant solved.
  std::map<std::string, std::vector<std::optional<double>>> samples;
  if (args.by == "delta") {
    const auto means = wcp::MeanOverInitializations(rows);
    for (wcp::DeltaKind kind : wcp::kAllDeltaKinds) {
      const std::string name(wcp::DeltaName(kind));
      auto& sample = samples[name];
      for (const auto& instance : instances) {
        auto it = means.find({instance, name});
        sample.push_back(it == means.end() ? std::nullopt
                                           : std::optional(it->second));
      }
    }
  } else if (args.by == "init") {
    const std::string delta(wcp::DeltaName(DeltaOrThrow(args.fixed_delta)));
    for (const auto& init : wcp::AllInitStrategies()) {
      samples[wcp::InitName(init)] =
          wcp::CostsFor(rows, instances, wcp::InitName(init), delta);
    }
  } else {
    throw wcp::InputError("--by must be delta or init");
  }
  auto paired = [&](const std::string& a, const std::string& b) {
    std::pair<std::vector<double>, std::vector<double>> out;
    const auto& sa = samples.at(a);
    const auto& sb = samples.at(b);
    for (std::size_t m = 0; m < instances.size(); ++m) {
      if (sa[m] && sb[m]) {
        out.first.push_back(*sa[m]);
        out.second.push_back(*sb[m]);
      }
    }
    return out;
  };

  if (!args.ratio_a.empty()) {
    if (!samples.contains(args.ratio_a) || !samples.contains(args.ratio_b)) {
      throw wcp::InputError("unknown variant for --ratio");
    }
    const auto [a, b] = paired(args.ratio_a, args.ratio_b);
    const auto table = wcp::QuantileRatioTable(a, b);
    for (std::size_t m : table.excluded) {
      std::cerr << "excluded pair " << m << ": zero denominator\n";
    }
    Emit(args.out, wcp::RatioCsv(table));
    return 0;
  }

  std::ostringstream csv;
  csv.precision(17);
  csv << "i,j,n_less,n_greater,n_equal,p_value,corrected_p,significant_1e2,"
         "significant_1e4\n";
  for (const auto& [i, si] : samples) {
    for (const auto& [j, sj] : samples) {
      if (i == j) continue;
      const auto [a, b] = paired(i, j);
      const auto r = wcp::SignTest(a, b, args.correction);
      csv << i << ',' << j << ',' << r.n_less << ',' << r.n_greater << ','
          << r.n_equal << ',' << r.p_value << ',' << r.corrected_p << ','
          << r.significant_1e2 << ',' << r.significant_1e4 << '\n';
    }
  }
  Emit(args.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wind farm cabling by negative cycle canceling"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instances");
  gen_cmd->add_option("--class", gen.size_class, "n1-like ... n5-like");
  gen_cmd->add_option("--divisor", gen.divisor, "Divide turbine counts");
  auto* gen_seed = gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--count", gen.count, "Instances (consecutive seeds)");
  gen_cmd->add_option("--turbines", gen.turbines, "Fixed turbine count");
  gen_cmd->add_option("--substations", gen.substations, "Fixed substation count");
  gen_cmd->add_option("-k", gen.k, "Nearest neighbors per vertex");
  gen_cmd->add_flag("--complete", gen.complete, "Complete graph");
  gen_cmd->add_option("-o,--out", gen.out, "File, or directory with --count");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  solve_cmd->add_option("instance,--instance", solve.instance)->required();
  solve_cmd->add_option("--init", solve.init);
  solve_cmd->add_option("--delta", solve.delta);
  auto* solve_seed = solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--time-limit-ms", solve.time_limit_ms);
  solve_cmd->add_option("--max-iterations", solve.max_iterations);
  solve_cmd->add_option("--trace", solve.trace, "Cancellation trace CSV");
  solve_cmd->add_option("--dump-residual", solve.dump_residual,
                        "Residual costs of the final flow as CSV");
  solve_cmd->add_option("--dump-delta", solve.dump_delta);
  solve_cmd->add_option("-o,--out", solve.out, "Solution JSON");
  solve_cmd->add_flag("--verify", solve.verify, "Check every cancellation");

  std::string oracle_instance;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum of a small instance");
  oracle_cmd->add_option("instance,--instance", oracle_instance)->required();
  oracle_cmd->add_option("-o,--out", oracle_out);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run strategy variants on instances");
  bench_cmd->add_option("inputs", bench.inputs, "Instance files or directories")
      ->required();
  bench_cmd->add_option("--init", bench.inits, "Default: all");
  bench_cmd->add_option("--delta", bench.deltas, "Default: all");
  auto* bench_seed = bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--jobs", bench.jobs);
  bench_cmd->add_option("--time-limit-ms", bench.time_limit_ms);
  bench_cmd->add_option("-o,--out", bench.out, "CSV file");
  bench_cmd->add_flag("--resume", bench.resume, "Skip instances already in --out");
  bench_cmd->add_flag("--omit-timing", bench.omit_timing);

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Sign tests over a bench CSV");
  compare_cmd->add_option("csv", compare.csv)->required();
  compare_cmd->add_option("--by", compare.by, "delta or init");
  compare_cmd->add_option("--fixed-delta", compare.fixed_delta);
  compare_cmd->add_option("--correction", compare.correction);
  compare_cmd->add_option("--ratio", compare.ratio_a, "Numerator variant");
  compare_cmd->add_option("--over", compare.ratio_b, "Denominator variant");
  compare_cmd->add_option("-o,--out", compare.out);

  std::string host = "127.0.0.1";
  int port = 8080;
  wcp::ServiceOptions service;
  auto* serve_cmd = app.add_subcommand("serve", "Planner HTTP service");
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--port", port);
  serve_cmd->add_option("--workers", service.workers);
  serve_cmd->add_option("--cors-origin", service.cors_origin);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return RunGen(gen, gen_seed);
    if (*solve_cmd) return RunSolve(solve, solve_seed);
    if (*oracle_cmd) return RunOracle(oracle_instance, oracle_out);
    if (*bench_cmd) return RunBench(bench, bench_seed);
    if (*compare_cmd) return RunCompare(compare);
    if (*serve_cmd) {
      wcp::PlannerServer server(service);
      std::cerr << "listening on " << host << ":" << port << "\n";
      server.Run(host, port);
      return 0;
    }
  } catch (const wcp::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const wcp::OracleRefusal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const wcp::InitializationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
