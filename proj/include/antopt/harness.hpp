#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "antopt/errors.hpp"
#include "antopt/objectives.hpp"
#include "antopt/optimizers.hpp"

namespace antopt {

enum class OptimizerKind { AcoClassic, AcoStar, AcoCustom, Pso, De };

OptimizerKind optimizer_kind_from_name(std::string_view name);
std::string optimizer_kind_name(OptimizerKind kind);

enum class OutputFormat { Csv, Json };
OutputFormat output_format_from_name(std::string_view name);
std::string output_format_name(OutputFormat format);

/// One multi-trial experiment: an objective, an optimizer, and trial
/// bookkeeping. Trial t runs with seed base_seed + t, so results are
/// independent of execution order and of the jobs count.
struct ExperimentConfig {
  ObjectiveId objective = ObjectiveId::Sphere;
  int dimension = 20;
  FormulaVariant variant = FormulaVariant::AsWritten;
  OptimizerKind optimizer = OptimizerKind::AcoStar;
  AcoParams aco{};
  PsoParams pso{};
  DeParams de{};
  int trials = 20;
  std::uint64_t base_seed = 1;
  int jobs = 1;
  std::filesystem::path out_dir;  // empty: compute only, write nothing
  OutputFormat format = OutputFormat::Csv;
  bool trace = false;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  TrialResult result;
};

struct AggregateResult {
  double mean = 0.0;
  double variance = 0.0;  // population variance (divide by trial count)
  std::vector<TrialRecord> records;
};

/// Thrown when a trial fails: carries the records that completed before the
/// failure so callers can flush them next to a failure marker.
class ExperimentAbort : public Error {
 public:
  ExperimentAbort(std::string message, std::vector<TrialRecord> partial)
      : Error(std::move(message)), partial_(std::move(partial)) {}
  const std::vector<TrialRecord>& partial() const { return partial_; }

 private:
  std::vector<TrialRecord> partial_;
};

/// The aco/aco-star presets fix selection, metric, and xi; aco-custom runs
/// config.aco as given. The classic preset is BHS(Weight) with manhattan,
/// the starred preset RWS(FitVal) with squared-euclidean, both at xi = 0.5.
AcoParams preset_aco_params(OptimizerKind kind, AcoParams base);

/// Runs config.trials seeded trials, aggregates mean and population variance
/// of final_best, and (when out_dir is set) writes trials.csv/aggregate.csv
/// or their JSON twins plus per-trial selection traces when tracing.
/// On a trial failure writes completed records and a failure marker, then
/// rethrows the trial error as ExperimentAbort.
AggregateResult run_experiment(const ExperimentConfig& config);

/// Applies a flat JSON config document onto config. Keys mirror the CLI
/// flags (function, dim, formula, optimizer, trials, seed, xi, selection,
/// basis, metric, jobs, out, format, trace) plus the parameter-block fields
/// (iterations, archive_size, new_solutions, q, swarm_size, cognitive,
/// social, inertia_high, inertia_low, population, weight_factor,
/// crossover_rate). Unknown keys are rejected.
void apply_json_config(ExperimentConfig& config, const std::string& json_text);

/// Shared knobs for the four studies.
struct StudyOptions {
  int trials = 20;
  std::uint64_t base_seed = 1;
  int jobs = 1;
  int max_iterations = 1000;
  std::vector<ObjectiveId> functions{benchmark_suite.begin(),
                                     benchmark_suite.end()};
  std::filesystem::path out_dir;
  OutputFormat format = OutputFormat::Csv;
};

struct SelectionStudyRow {
  SelectionSpec spec;
  std::vector<double> per_function_mean;
  double grand_mean = 0.0;
};

struct MetricStudyRow {
  DistanceMetric metric;
  std::vector<double> per_function_mean;
  double grand_mean = 0.0;
};

struct EvaporationStudyRow {
  double xi = 0.0;
  std::vector<double> per_function_mean;
  double grand_mean = 0.0;
};

struct CompareStudyRow {
  ObjectiveId function = ObjectiveId::Sphere;
  OptimizerKind optimizer = OptimizerKind::AcoStar;
  double mean = 0.0;
  double variance = 0.0;
};

/// Six selection strategies (RWS/SUS/BHS x FitVal/Weight) at n = 30 with
/// the manhattan metric: per-function means and the grand mean per strategy.
std::vector<SelectionStudyRow> study_selection(const StudyOptions& options);

/// Ten distance metrics at n = 2 under RWS(FitVal): grand mean per metric.
std::vector<MetricStudyRow> study_metrics(const StudyOptions& options);

/// Evaporation-rate sweep at n = 20 under RWS(FitVal) + squared-euclidean:
/// grand mean per xi. Empty xi_list means the default grid 0.1..1.0.
std::vector<EvaporationStudyRow> study_evaporation(const StudyOptions& options,
                                                   std::vector<double> xi_list);

/// Default sweep grid 0.1, 0.2, ..., 1.0.
std::vector<double> default_xi_grid();

/// Four optimizers (classic archive preset, starred preset, pso, de) over
/// the suite at d = 20: mean and variance per (function, optimizer).
std::vector<CompareStudyRow> study_compare(const StudyOptions& options);

}  // namespace antopt
