#include "wcp/experiment.h"

#include <atomic>
#include <charconv>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "wcp/errors.h"

namespace wcp {

std::vector<Variant> AllVariants() {
  std::vector<Variant> variants;
  for (const InitStrategy& init : AllInitStrategies()) {
    for (DeltaKind delta : kAllDeltaKinds) variants.push_back({init, delta});
  }
  return variants;
}

namespace {

ExperimentRow RunOne(const NamedInstance& instance, const Variant& variant,
                     const ExperimentOptions& options) {
  ExperimentRow row;
  row.instance = instance.name;
  row.init = InitName(variant.init);
  row.delta = std::string(DeltaName(variant.delta));
  row.seed = options.seed;
  SolveOptions solve;
  solve.init = variant.init;
  solve.delta = variant.delta;
  solve.seed = options.seed;
  solve.limits = options.limits;
  try {
    const Solution solution = Solve(instance.farm, solve);
    row.cost = solution.cost;
    row.wall_ms = solution.wall_ms;
    row.iterations = solution.iterations;
    row.cancels = static_cast<std::int64_t>(solution.trace.size());
    row.status = StopReasonName(solution.stop);
  } catch (const std::exception& e) {
    row.status = std::string("error: ") + e.what();
  }
  return row;
}

std::vector<std::string> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch == '\n' ? ' ' : ch);
  }
  return out + "\"";
}

template <typename T>
T ParseNumber(const std::string& text, const char* column) {
  T value{};
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InputError(std::string("bad ") + column + " value: " + text);
  }
  return value;
}

}  // namespace

std::vector<ExperimentRow> RunExperiment(
    const std::vector<NamedInstance>& instances, const ExperimentOptions& options,
    const std::function<void(const ExperimentRow&)>& on_row) {
  std::vector<const NamedInstance*> todo;
  for (const NamedInstance& instance : instances) {
    if (!options.skip.contains(instance.name)) todo.push_back(&instance);
  }
  const std::size_t per_instance = options.variants.size();
  const std::size_t total = todo.size() * per_instance;
  std::vector<std::optional<ExperimentRow>> slots(total);
  std::size_t emitted = 0;
  std::mutex mutex;
  // Emits finished rows in order so callers can stream them.
  auto flush = [&] {
    while (emitted < total && slots[emitted]) {
      if (on_row) on_row(*slots[emitted]);
      ++emitted;
    }
  };

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      ExperimentRow row = RunOne(*todo[i / per_instance],
                                 options.variants[i % per_instance], options);
      std::lock_guard lock(mutex);
      slots[i] = std::move(row);
      flush();
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(work);
    for (std::thread& t : workers) t.join();
  }

  std::vector<ExperimentRow> rows;
  rows.reserve(total);
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

std::string ExperimentCsv(const std::vector<ExperimentRow>& rows,
                          bool omit_timing, bool header) {
  std::ostringstream out;
  if (header) {
    out << "instance,init,delta,seed,cost,wall_ms,iterations,cancels,status\n";
  }
  for (const ExperimentRow& row : rows) {
    out << CsvField(row.instance) << ',' << row.init << ',' << row.delta << ','
        << row.seed << ',' << (row.cost ? row.cost->ToString() : "") << ',';
    if (!omit_timing) out << std::fixed << std::setprecision(3) << row.wall_ms;
    out << ',' << row.iterations << ',' << row.cancels << ','
        << CsvField(row.status) << '\n';
  }
  return out.str();
}

std::vector<ExperimentRow> ParseExperimentCsv(std::string_view text) {
  std::vector<ExperimentRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line.rfind("instance,", 0) == 0) continue;
    }
    const auto f = SplitCsvLine(line);
    if (f.size() != 9) throw InputError("experiment row needs 9 columns: " + line);
    ExperimentRow row;
    row.instance = f[0];
    row.init = f[1];
    row.delta = f[2];
    row.seed = ParseNumber<std::uint64_t>(f[3], "seed");
    if (!f[4].empty()) {
      row.cost = Cost::Parse(f[4]);
      if (!row.cost) throw InputError("bad cost value: " + f[4]);
    }
    if (!f[5].empty()) row.wall_ms = std::stod(f[5]);
    row.iterations = ParseNumber<std::int64_t>(f[6], "iterations");
    row.cancels = ParseNumber<std::int64_t>(f[7], "cancels");
    row.status = f[8];
    rows.push_back(std::move(row));
  }
  return rows;
}

std::map<std::pair<std::string, std::string>, double> MeanOverInitializations(
    const std::vector<ExperimentRow>& rows) {
  std::map<std::pair<std::string, std::string>, std::pair<double, int>> sums;
  for (const ExperimentRow& row : rows) {
    if (!row.cost || row.cost->IsInfinite()) continue;
    auto& [sum, count] = sums[{row.instance, row.delta}];
    sum += row.cost->ToDouble();
    ++count;
  }
  std::map<std::pair<std::string, std::string>, double> means;
  for (const auto& [key, value] : sums) {
    means[key] = value.first / value.second;
  }
  return means;
}

std::vector<std::optional<double>> CostsFor(
    const std::vector<ExperimentRow>& rows,
    const std::vector<std::string>& instances, std::string_view init,
    std::string_view delta) {
  std::map<std::string, double> found;
  for (const ExperimentRow& row : rows) {
    if (row.init == init && row.delta == delta && row.cost &&
        row.cost->IsFinite()) {
      found[row.instance] = row.cost->ToDouble();
    }
  }
  std::vector<std::optional<double>> costs;
  for (const std::string& name : instances) {
    auto it = found.find(name);
    costs.push_back(it == found.end() ? std::nullopt
                                      : std::optional<double>(it->second));
  }
  return costs;
}

}  // namespace wcp
