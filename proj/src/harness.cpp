#include "antopt/harness.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

#include <json.hpp>

#include "antopt/errors.hpp"
#include "antopt/io.hpp"

namespace antopt {

OptimizerKind optimizer_kind_from_name(std::string_view name) {
  if (name == "aco") return OptimizerKind::AcoClassic;
  if (name == "aco-star") return OptimizerKind::AcoStar;
  if (name == "aco-custom") return OptimizerKind::AcoCustom;
  if (name == "pso") return OptimizerKind::Pso;
  if (name == "de") return OptimizerKind::De;
  throw ConfigError("unknown optimizer: " + std::string(name));
}

std::string optimizer_kind_name(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::AcoClassic: return "aco";
    case OptimizerKind::AcoStar: return "aco-star";
    case OptimizerKind::AcoCustom: return "aco-custom";
    case OptimizerKind::Pso: return "pso";
    case OptimizerKind::De: return "de";
  }
  return "?";
}

OutputFormat output_format_from_name(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw ConfigError("unknown output format: " + std::string(name));
}

std::string output_format_name(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "json";
}

AcoParams preset_aco_params(OptimizerKind kind, AcoParams base) {
  switch (kind) {
    case OptimizerKind::AcoClassic:
      base.selection = {SelectionMethod::Bhs, ProbabilityBasis::Weight,
                        base.selection.q};
      base.metric = DistanceMetric::manhattan();
      base.xi = EvaporationRate(0.5);
      return base;
    case OptimizerKind::AcoStar:
      base.selection = {SelectionMethod::Rws, ProbabilityBasis::FitVal,
                        base.selection.q};
      base.metric = DistanceMetric::squared_euclidean();
      base.xi = EvaporationRate(0.5);
      return base;
    case OptimizerKind::AcoCustom:
      return base;
    default:
      throw ConfigError("preset_aco_params: not an archive optimizer");
  }
}

namespace {

/// Runs body(0..count-1) on up to jobs worker threads. Work items are
/// claimed from an atomic counter; each item runs exactly once.
void parallel_for(int count, int jobs, const std::function<void(int)>& body) {
  const int workers = std::max(1, std::min(jobs, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&next, count, &body] {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        body(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

TrialResult run_one_trial(const ExperimentConfig& config,
                          const ObjectiveSpec& objective, std::uint64_t seed) {
  RandomSource rng(seed);
  switch (config.optimizer) {
    case OptimizerKind::Pso: {
      PsoParams params = config.pso;
      params.seed = seed;
      return pso_run(params, objective, rng);
    }
    case OptimizerKind::De: {
      DeParams params = config.de;
      params.seed = seed;
      return de_run(params, objective, rng);
    }
    default: {
      AcoParams params = preset_aco_params(config.optimizer, config.aco);
      params.seed = seed;
      params.record_trace = config.trace;
      return aco_run(params, objective, rng);
    }
  }
}

/// Trials only, no file output. Aggregation consumes results in trial-index
/// order, so the outcome is independent of the worker schedule.
AggregateResult compute_experiment(const ExperimentConfig& config) {
  if (config.trials < 1) throw ConfigError("experiment: trials must be >= 1");
  if (config.jobs < 1) throw ConfigError("experiment: jobs must be >= 1");
  const ObjectiveSpec objective =
      make_objective(config.objective, config.dimension, config.variant);

  std::vector<std::optional<TrialResult>> outcomes(
      static_cast<std::size_t>(config.trials));
  std::vector<std::string> failures(static_cast<std::size_t>(config.trials));

  parallel_for(config.trials, config.jobs, [&](int t) {
    const std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(t);
    try {
      outcomes[static_cast<std::size_t>(t)] =
          run_one_trial(config, objective, seed);
    } catch (const Error& e) {
      failures[static_cast<std::size_t>(t)] = e.what();
    }
  });

  AggregateResult aggregate;
  aggregate.records.reserve(static_cast<std::size_t>(config.trials));
  for (int t = 0; t < config.trials; ++t) {
    if (outcomes[static_cast<std::size_t>(t)]) {
      aggregate.records.push_back(
          {t, config.base_seed + static_cast<std::uint64_t>(t),
           std::move(*outcomes[static_cast<std::size_t>(t)])});
    }
  }
  for (int t = 0; t < config.trials; ++t) {
    if (!failures[static_cast<std::size_t>(t)].empty()) {
      std::ostringstream msg;
      msg << "trial " << t << " (seed "
          << config.base_seed + static_cast<std::uint64_t>(t)
          << ") failed: " << failures[static_cast<std::size_t>(t)];
      throw ExperimentAbort(msg.str(), std::move(aggregate.records));
    }
  }

  double sum = 0.0;
  for (const TrialRecord& r : aggregate.records) sum += r.result.final_best;
  aggregate.mean = sum / static_cast<double>(aggregate.records.size());
  double accum = 0.0;
  for (const TrialRecord& r : aggregate.records) {
    const double d = r.result.final_best - aggregate.mean;
    accum += d * d;
  }
  aggregate.variance = accum / static_cast<double>(aggregate.records.size());
  return aggregate;
}

void write_experiment_files(const ExperimentConfig& config,
                            std::span<const TrialRecord> records,
                            const AggregateResult* aggregate,
                            const std::string& failure) {
  if (config.out_dir.empty()) return;
  const RunLabel label = run_label(config);
  if (config.format == OutputFormat::Csv) {
    write_text_file(config.out_dir / "trials.csv",
                    per_trial_csv(label, records));
    if (aggregate) {
      write_text_file(
          config.out_dir / "aggregate.csv",
          aggregate_csv_header() +
              aggregate_csv_row(label.function, label.optimizer,
                                aggregate->mean, aggregate->variance,
                                static_cast<int>(aggregate->records.size())));
    }
  } else {
    write_text_file(config.out_dir / "trials.json",
                    per_trial_json(label, records));
    if (aggregate) {
      write_text_file(config.out_dir / "aggregate.json",
                      aggregate_json(label, *aggregate));
    }
  }
  if (config.trace) {
    for (const TrialRecord& record : records) {
      if (record.result.selection_trace.empty()) continue;
      std::ostringstream name;
      name << "trace_trial" << record.trial << ".csv";
      write_text_file(config.out_dir / name.str(),
                      trace_csv(record.result.selection_trace));
    }
  }
  if (!failure.empty()) {
    write_text_file(config.out_dir / "failure.txt", failure + "\n");
  }
}

}  // namespace

AggregateResult run_experiment(const ExperimentConfig& config) {
  try {
    AggregateResult aggregate = compute_experiment(config);
    write_experiment_files(config, aggregate.records, &aggregate, "");
    return aggregate;
  } catch (const ExperimentAbort& abort) {
    write_experiment_files(config, abort.partial(), nullptr, abort.what());
    throw;
  }
}

void apply_json_config(ExperimentConfig& config, const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");

  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "function") {
        config.objective = objective_from_name(value.get<std::string>());
      } else if (key == "dim") {
        config.dimension = value.get<int>();
      } else if (key == "formula") {
        config.variant = formula_variant_from_name(value.get<std::string>());
      } else if (key == "optimizer") {
        config.optimizer = optimizer_kind_from_name(value.get<std::string>());
      } else if (key == "trials") {
        config.trials = value.get<int>();
      } else if (key == "seed") {
        config.base_seed = value.get<std::uint64_t>();
      } else if (key == "jobs") {
        config.jobs = value.get<int>();
      } else if (key == "out") {
        config.out_dir = value.get<std::string>();
      } else if (key == "format") {
        config.format = output_format_from_name(value.get<std::string>());
      } else if (key == "trace") {
        config.trace = value.get<bool>();
      } else if (key == "xi") {
        config.aco.xi = EvaporationRate(value.get<double>());
      } else if (key == "selection") {
        config.aco.selection.method =
            selection_method_from_name(value.get<std::string>());
      } else if (key == "basis") {
        config.aco.selection.basis =
            probability_basis_from_name(value.get<std::string>());
      } else if (key == "q") {
        config.aco.selection.q = value.get<double>();
      } else if (key == "metric") {
        config.aco.metric = DistanceMetric::from_name(value.get<std::string>());
      } else if (key == "archive_size") {
        config.aco.archive_size = value.get<int>();
      } else if (key == "new_solutions") {
        config.aco.new_solutions = value.get<int>();
      } else if (key == "iterations") {
        const int iterations = value.get<int>();
        config.aco.max_iterations = iterations;
        config.pso.max_iterations = iterations;
        config.de.max_iterations = iterations;
      } else if (key == "swarm_size") {
        config.pso.swarm_size = value.get<int>();
      } else if (key == "cognitive") {
        config.pso.cognitive = value.get<double>();
      } else if (key == "social") {
        config.pso.social = value.get<double>();
      } else if (key == "inertia_high") {
        config.pso.inertia_high = value.get<double>();
      } else if (key == "inertia_low") {
        config.pso.inertia_low = value.get<double>();
      } else if (key == "population") {
        config.de.population = value.get<int>();
      } else if (key == "weight_factor") {
        config.de.weight_factor = value.get<double>();
      } else if (key == "crossover_rate") {
        config.de.crossover_rate = value.get<double>();
      } else {
        throw ConfigError("config: unknown key \"" + key + "\"");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: bad value type: ") + e.what());
  }
}

std::vector<double> default_xi_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(static_cast<double>(i) / 10.0);
  return grid;
}

namespace {

struct CellOutcome {
  double mean = 0.0;
  std::vector<TrialRecord> records;
};

/// Shared driver for the study tables: runs one experiment per
/// (parameterization, function) cell, accumulating per-trial rows, and
/// flushes whatever completed (plus a failure marker) if a cell aborts.
class StudyWriter {
 public:
  StudyWriter(std::string study_name, const StudyOptions& options)
      : name_(std::move(study_name)), options_(options) {}

  CellOutcome run_cell(ExperimentConfig config) {
    config.trials = options_.trials;
    config.base_seed = options_.base_seed;
    config.jobs = options_.jobs;
    config.out_dir.clear();
    try {
      AggregateResult aggregate = compute_experiment(config);
      CellOutcome outcome{aggregate.mean, std::move(aggregate.records)};
      append_trials(config, outcome.records);
      return outcome;
    } catch (const ExperimentAbort& abort) {
      append_trials(config, abort.partial());
      std::ostringstream msg;
      msg << name_ << ": " << objective_name(config.objective) << " x "
          << optimizer_kind_name(config.optimizer) << ": " << abort.what();
      failure_ = msg.str();
      flush(nullptr, nullptr);
      throw ExperimentAbort(failure_, {});
    }
  }

  /// Writes the study summary (and the accumulated per-trial rows).
  /// The summary lands in the requested format; per-trial rows are CSV.
  void flush(const std::string* summary_csv, const std::string* summary_json) {
    if (options_.out_dir.empty()) return;
    if (options_.format == OutputFormat::Csv) {
      if (summary_csv) {
        write_text_file(options_.out_dir / (name_ + ".csv"), *summary_csv);
      }
    } else if (summary_json) {
      write_text_file(options_.out_dir / (name_ + ".json"), *summary_json);
    }
    write_text_file(options_.out_dir / (name_ + "_trials.csv"),
                    per_trial_csv_header() + trial_rows_.str());
    if (!failure_.empty()) {
      write_text_file(options_.out_dir / "failure.txt", failure_ + "\n");
    }
  }

 private:
  void append_trials(const ExperimentConfig& config,
                     std::span<const TrialRecord> records) {
    trial_rows_ << per_trial_csv_rows(run_label(config), records);
  }

  std::string name_;
  const StudyOptions& options_;
  std::ostringstream trial_rows_;
  std::string failure_;
};

ExperimentConfig aco_study_config(const StudyOptions& options,
                                  ObjectiveId function, int dimension) {
  ExperimentConfig config;
  config.objective = function;
  config.dimension = dimension;
  config.optimizer = OptimizerKind::AcoCustom;
  config.aco.archive_size = 10;
  config.aco.new_solutions = 10;
  config.aco.max_iterations = options.max_iterations;
  config.aco.xi = EvaporationRate(0.5);
  return config;
}

double mean_of(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

std::vector<SelectionStudyRow> study_selection(const StudyOptions& options) {
  static constexpr SelectionMethod methods[] = {
      SelectionMethod::Rws, SelectionMethod::Sus, SelectionMethod::Bhs};
  static constexpr ProbabilityBasis bases[] = {ProbabilityBasis::FitVal,
                                               ProbabilityBasis::Weight};
  StudyWriter writer("study_selection", options);
  std::vector<SelectionStudyRow> rows;
  for (SelectionMethod method : methods) {
    for (ProbabilityBasis basis : bases) {
      SelectionStudyRow row;
      row.spec = {method, basis, 0.1};
      for (ObjectiveId function : options.functions) {
        ExperimentConfig config = aco_study_config(options, function, 30);
        config.aco.selection = row.spec;
        config.aco.metric = DistanceMetric::manhattan();
        row.per_function_mean.push_back(writer.run_cell(config).mean);
      }
      row.grand_mean = mean_of(row.per_function_mean);
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream summary;
  summary << "selection,basis";
  for (ObjectiveId function : options.functions) {
    summary << ',' << objective_name(function);
  }
  summary << ",grand_mean\n";
  nlohmann::json json_rows = nlohmann::json::array();
  for (const SelectionStudyRow& row : rows) {
    summary << selection_method_name(row.spec.method) << ','
            << probability_basis_name(row.spec.basis);
    for (double m : row.per_function_mean) summary << ',' << format_real(m);
    summary << ',' << format_real(row.grand_mean) << '\n';
    nlohmann::json entry{
        {"selection", selection_method_name(row.spec.method)},
        {"basis", probability_basis_name(row.spec.basis)},
        {"grand_mean", row.grand_mean}};
    for (std::size_t f = 0; f < options.functions.size(); ++f) {
      entry[objective_name(options.functions[f])] = row.per_function_mean[f];
    }
    json_rows.push_back(std::move(entry));
  }
  const std::string text = summary.str();
  const std::string json_text =
      nlohmann::json{{"strategies", json_rows}}.dump(2) + "\n";
  writer.flush(&text, &json_text);
  return rows;
}

std::vector<MetricStudyRow> study_metrics(const StudyOptions& options) {
  StudyWriter writer("study_metrics", options);
  std::vector<MetricStudyRow> rows;
  for (const DistanceMetric& metric : DistanceMetric::family()) {
    MetricStudyRow row;
    row.metric = metric;
    for (ObjectiveId function : options.functions) {
      ExperimentConfig config = aco_study_config(options, function, 2);
      config.aco.selection = {SelectionMethod::Rws, ProbabilityBasis::FitVal,
                              0.1};
      config.aco.metric = metric;
      row.per_function_mean.push_back(writer.run_cell(config).mean);
    }
    row.grand_mean = mean_of(row.per_function_mean);
    rows.push_back(std::move(row));
  }

  std::ostringstream summary;
  summary << "metric";
  for (ObjectiveId function : options.functions) {
    summary << ',' << objective_name(function);
  }
  summary << ",grand_mean\n";
  nlohmann::json json_rows = nlohmann::json::array();
  for (const MetricStudyRow& row : rows) {
    summary << row.metric.name();
    for (double m : row.per_function_mean) summary << ',' << format_real(m);
    summary << ',' << format_real(row.grand_mean) << '\n';
    nlohmann::json entry{{"metric", row.metric.name()},
                         {"grand_mean", row.grand_mean}};
    for (std::size_t f = 0; f < options.functions.size(); ++f) {
      entry[objective_name(options.functions[f])] = row.per_function_mean[f];
    }
    json_rows.push_back(std::move(entry));
  }
  const std::string text = summary.str();
  const std::string json_text =
      nlohmann::json{{"metrics", json_rows}}.dump(2) + "\n";
  writer.flush(&text, &json_text);
  return rows;
}

std::vector<EvaporationStudyRow> study_evaporation(
    const StudyOptions& options, std::vector<double> xi_list) {
  if (xi_list.empty()) xi_list = default_xi_grid();
  for (double xi : xi_list) {
    if (!(xi > 0.0)) throw ConfigError("evaporation study: xi must be > 0");
  }
  StudyWriter writer("study_evaporation", options);
  std::vector<EvaporationStudyRow> rows;
  for (double xi : xi_list) {
    EvaporationStudyRow row;
    row.xi = xi;
    for (ObjectiveId function : options.functions) {
      ExperimentConfig config = aco_study_config(options, function, 20);
      config.aco.selection = {SelectionMethod::Rws, ProbabilityBasis::FitVal,
                              0.1};
      config.aco.metric = DistanceMetric::squared_euclidean();
      config.aco.xi = EvaporationRate(xi);
      row.per_function_mean.push_back(writer.run_cell(config).mean);
    }
    row.grand_mean = mean_of(row.per_function_mean);
    rows.push_back(std::move(row));
  }

  std::ostringstream summary;
  summary << "xi";
  for (ObjectiveId function : options.functions) {
    summary << ',' << objective_name(function);
  }
  summary << ",grand_mean\n";
  nlohmann::json json_rows = nlohmann::json::array();
  for (const EvaporationStudyRow& row : rows) {
    summary << format_real(row.xi);
    for (double m : row.per_function_mean) summary << ',' << format_real(m);
    summary << ',' << format_real(row.grand_mean) << '\n';
    nlohmann::json entry{{"xi", row.xi}, {"grand_mean", row.grand_mean}};
    for (std::size_t f = 0; f < options.functions.size(); ++f) {
      entry[objective_name(options.functions[f])] = row.per_function_mean[f];
    }
    json_rows.push_back(std::move(entry));
  }
  const std::string text = summary.str();
  const std::string json_text =
      nlohmann::json{{"sweep", json_rows}}.dump(2) + "\n";
  writer.flush(&text, &json_text);
  return rows;
}

std::vector<CompareStudyRow> study_compare(const StudyOptions& options) {
  static constexpr OptimizerKind optimizers[] = {
      OptimizerKind::AcoClassic, OptimizerKind::AcoStar, OptimizerKind::Pso,
      OptimizerKind::De};
  StudyWriter writer("study_compare", options);
  std::vector<CompareStudyRow> rows;
  std::ostringstream summary;
  summary << aggregate_csv_header();
  nlohmann::json json_rows = nlohmann::json::array();
  for (ObjectiveId function : options.functions) {
    for (OptimizerKind optimizer : optimizers) {
      ExperimentConfig config;
      config.objective = function;
      config.dimension = 20;
      config.optimizer = optimizer;
      config.aco.max_iterations = options.max_iterations;
      config.pso.max_iterations = options.max_iterations;
      config.de.max_iterations = options.max_iterations;
      const CellOutcome outcome = writer.run_cell(config);
      CompareStudyRow row;
      row.function = function;
      row.optimizer = optimizer;
      row.mean = outcome.mean;
      double accum = 0.0;
      for (const TrialRecord& r : outcome.records) {
        const double d = r.result.final_best - outcome.mean;
        accum += d * d;
      }
      row.variance = accum / static_cast<double>(outcome.records.size());
      rows.push_back(row);
      summary << aggregate_csv_row(objective_name(function),
                                   optimizer_kind_name(optimizer), row.mean,
                                   row.variance,
                                   static_cast<int>(outcome.records.size()));
      json_rows.push_back({{"function", objective_name(function)},
                           {"optimizer", optimizer_kind_name(optimizer)},
                           {"mean", row.mean},
                           {"variance", row.variance},
                           {"trials", outcome.records.size()}});
    }
  }
  const std::string text = summary.str();
  const std::string json_text =
      nlohmann::json{{"comparison", json_rows}}.dump(2) + "\n";
  writer.flush(&text, &json_text);
  return rows;
}

}  // namespace antopt
