#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "antopt/errors.hpp"
#include "antopt/harness.hpp"
#include "antopt/io.hpp"
#include "antopt/selmap.hpp"

namespace {

using namespace antopt;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct RunFlags {
  std::string config_path;
  std::string function = "sphere";
  int dim = 20;
  int trials = 20;
  std::uint64_t seed = 1;
  double xi = 0.5;
  std::string selection = "rws";
  std::string basis = "fitval";
  std::string metric = "squared-euclidean";
  std::string formula = "paper";
  std::string optimizer = "aco-star";
  int jobs = 1;
  std::string out = "out";
  std::string format = "csv";
  bool trace = false;
  int iterations = 1000;
  int archive_size = 10;
  int new_solutions = 10;
  double q = 0.1;
};

void add_run_flags(CLI::App* cmd, RunFlags& flags) {
  cmd->add_option("--config", flags.config_path,
                  "JSON config file; explicit flags override its values");
  cmd->add_option("--function", flags.function,
                  "ackley|sphere|sumsquare|dixonprice|rosenbrock|rastrigin|"
                  "griewank|zakharov");
  cmd->add_option("--dim", flags.dim, "problem dimension");
  cmd->add_option("--trials", flags.trials, "independent trials");
  cmd->add_option("--seed", flags.seed, "base seed; trial t uses seed + t");
  cmd->add_option("--xi", flags.xi, "evaporation rate");
  cmd->add_option("--selection", flags.selection, "rws|sus|bhs");
  cmd->add_option("--basis", flags.basis, "weight|fitval");
  cmd->add_option("--metric", flags.metric,
                  "minkowski-0.5|manhattan|euclidean|minkowski-3|minkowski-4|"
                  "minkowski-5|squared-euclidean|chebychev|bray-curtis|"
                  "canberra");
  cmd->add_option("--formula", flags.formula, "paper|standard");
  cmd->add_option("--optimizer", flags.optimizer,
                  "aco|aco-star|aco-custom|pso|de");
  cmd->add_option("--jobs", flags.jobs, "parallel trial workers");
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--format", flags.format, "csv|json");
  cmd->add_flag("--trace", flags.trace, "record per-trial selection traces");
  cmd->add_option("--iterations", flags.iterations, "iteration budget");
  cmd->add_option("--archive-size", flags.archive_size, "archive size k");
  cmd->add_option("--new-solutions", flags.new_solutions,
                  "solutions constructed per iteration m");
  cmd->add_option("--q", flags.q, "rank-weight spread parameter");
}

ExperimentConfig build_config(const CLI::App* cmd, const RunFlags& flags) {
  ExperimentConfig config;
  config.out_dir = "out";
  if (!flags.config_path.empty()) {
    apply_json_config(config, read_file(flags.config_path));
  }
  const auto passed = [cmd](const std::string& name) {
    return cmd->count(name) > 0;
  };
  if (passed("--function")) config.objective = objective_from_name(flags.function);
  if (passed("--dim")) config.dimension = flags.dim;
  if (passed("--formula")) config.variant = formula_variant_from_name(flags.formula);
  if (passed("--optimizer")) config.optimizer = optimizer_kind_from_name(flags.optimizer);
  if (passed("--trials")) config.trials = flags.trials;
  if (passed("--seed")) config.base_seed = flags.seed;
  if (passed("--jobs")) config.jobs = flags.jobs;
  if (passed("--out")) config.out_dir = flags.out;
  if (passed("--format")) config.format = output_format_from_name(flags.format);
  if (passed("--trace")) config.trace = flags.trace;
  if (passed("--xi")) config.aco.xi = EvaporationRate(flags.xi);
  if (passed("--selection")) {
    config.aco.selection.method = selection_method_from_name(flags.selection);
  }
  if (passed("--basis")) {
    config.aco.selection.basis = probability_basis_from_name(flags.basis);
  }
  if (passed("--metric")) config.aco.metric = DistanceMetric::from_name(flags.metric);
  if (passed("--q")) config.aco.selection.q = flags.q;
  if (passed("--archive-size")) config.aco.archive_size = flags.archive_size;
  if (passed("--new-solutions")) config.aco.new_solutions = flags.new_solutions;
  if (passed("--iterations")) {
    config.aco.max_iterations = flags.iterations;
    config.pso.max_iterations = flags.iterations;
    config.de.max_iterations = flags.iterations;
  }
  return config;
}

int do_run(const CLI::App* cmd, const RunFlags& flags) {
  const ExperimentConfig config = build_config(cmd, flags);
  const AggregateResult result = run_experiment(config);
  const RunLabel label = run_label(config);
  std::cout << "function=" << label.function << " optimizer=" << label.optimizer
            << " dim=" << label.dimension << " trials="
            << result.records.size() << "\n"
            << "mean=" << format_real(result.mean)
            << " variance=" << format_real(result.variance) << "\n";
  if (!config.out_dir.empty()) {
    std::cout << "results written to " << config.out_dir.string() << "\n";
  }
  return 0;
}

struct StudyFlags {
  int trials = 20;
  std::uint64_t seed = 1;
  int jobs = 1;
  int iterations = 1000;
  std::string out = "out";
  std::string format = "csv";
  std::vector<double> xis;
};

void add_study_flags(CLI::App* cmd, StudyFlags& flags, bool with_xi) {
  cmd->add_option("--trials", flags.trials, "trials per cell");
  cmd->add_option("--seed", flags.seed, "base seed");
  cmd->add_option("--jobs", flags.jobs, "parallel trial workers");
  cmd->add_option("--iterations", flags.iterations, "iteration budget");
  cmd->add_option("--out", flags.out, "output directory");
  cmd->add_option("--format", flags.format, "csv|json");
  if (with_xi) {
    cmd->add_option("--xi", flags.xis,
                    "sweep values (repeatable); default grid 0.1..1.0");
  }
}

StudyOptions build_study_options(const StudyFlags& flags) {
  StudyOptions options;
  options.trials = flags.trials;
  options.base_seed = flags.seed;
  options.jobs = flags.jobs;
  options.max_iterations = flags.iterations;
  options.out_dir = flags.out;
  options.format = output_format_from_name(flags.format);
  return options;
}

int do_study_selection(const StudyFlags& flags) {
  const auto rows = study_selection(build_study_options(flags));
  std::cout << "selection,basis,grand_mean\n";
  for (const auto& row : rows) {
    std::cout << selection_method_name(row.spec.method) << ','
              << probability_basis_name(row.spec.basis) << ','
              << format_real(row.grand_mean) << "\n";
  }
  return 0;
}

int do_study_metrics(const StudyFlags& flags) {
  const auto rows = study_metrics(build_study_options(flags));
  std::cout << "metric,grand_mean\n";
  for (const auto& row : rows) {
    std::cout << row.metric.name() << ',' << format_real(row.grand_mean)
              << "\n";
  }
  return 0;
}

int do_study_evaporation(const StudyFlags& flags) {
  const auto rows = study_evaporation(build_study_options(flags), flags.xis);
  std::cout << "xi,grand_mean\n";
  std::size_t best = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::cout << format_real(rows[i].xi) << ','
              << format_real(rows[i].grand_mean) << "\n";
    if (rows[i].grand_mean < rows[best].grand_mean) best = i;
  }
  std::cout << "best xi=" << format_real(rows[best].xi) << " (grand mean "
            << format_real(rows[best].grand_mean) << ")\n";
  return 0;
}

int do_study_compare(const StudyFlags& flags) {
  const auto rows = study_compare(build_study_options(flags));
  std::cout << "function,optimizer,mean,variance\n";
  for (const auto& row : rows) {
    std::cout << objective_name(row.function) << ','
              << optimizer_kind_name(row.optimizer) << ','
              << format_real(row.mean) << ',' << format_real(row.variance)
              << "\n";
  }
  return 0;
}

struct SelmapFlags {
  std::string function = "ackley";
  int dim = 30;
  std::uint64_t seed = 1;
  double xi = 0.5;
  std::string metric = "manhattan";
  std::string formula = "paper";
  std::string out = "out";
};

int do_selmap(const SelmapFlags& flags) {
  // Strategy labels and strokes, in the customary listing order.
  struct Entry {
    SelectionMethod method;
    ProbabilityBasis basis;
    const char* label;
    const char* color;
  };
  static constexpr Entry entries[] = {
      {SelectionMethod::Rws, ProbabilityBasis::FitVal, "rws-fitval", "indigo"},
      {SelectionMethod::Rws, ProbabilityBasis::Weight, "rws-weight", "red"},
      {SelectionMethod::Sus, ProbabilityBasis::FitVal, "sus-fitval", "green"},
      {SelectionMethod::Sus, ProbabilityBasis::Weight, "sus-weight", "purple"},
      {SelectionMethod::Bhs, ProbabilityBasis::FitVal, "bhs-fitval", "blue"},
      {SelectionMethod::Bhs, ProbabilityBasis::Weight, "bhs-weight", "orange"},
  };

  const ObjectiveSpec objective =
      make_objective(objective_from_name(flags.function), flags.dim,
                     formula_variant_from_name(flags.formula));
  std::vector<LabeledTrace> traces;
  for (const Entry& entry : entries) {
    AcoParams params;
    params.selection = {entry.method, entry.basis, 0.1};
    params.metric = DistanceMetric::from_name(flags.metric);
    params.xi = EvaporationRate(flags.xi);
    params.max_iterations = 1;
    params.record_trace = true;
    params.seed = flags.seed;
    RandomSource rng(flags.seed);
    TrialResult result = aco_run(params, objective, rng);
    traces.push_back(
        {entry.label, entry.color, std::move(result.selection_trace)});
  }
  export_selection_map(traces, 10, flags.out);
  std::cout << "selection maps written to " << flags.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"archive-based continuous ant colony optimizer and benchmarks"};
  app.require_subcommand(1);

  RunFlags run_flags;
  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment");
  add_run_flags(run_cmd, run_flags);

  CLI::App* study_cmd = app.add_subcommand("study", "run a study");
  study_cmd->require_subcommand(1);
  StudyFlags selection_flags, metrics_flags, evaporation_flags, compare_flags;
  CLI::App* sel_cmd = study_cmd->add_subcommand(
      "selection", "six selection strategies at n=30");
  add_study_flags(sel_cmd, selection_flags, false);
  CLI::App* met_cmd =
      study_cmd->add_subcommand("metrics", "ten distance metrics at n=2");
  add_study_flags(met_cmd, metrics_flags, false);
  CLI::App* evap_cmd = study_cmd->add_subcommand(
      "evaporation", "evaporation-rate sweep at n=20");
  add_study_flags(evap_cmd, evaporation_flags, true);
  CLI::App* cmp_cmd = study_cmd->add_subcommand(
      "compare", "four optimizers over the suite at d=20");
  add_study_flags(cmp_cmd, compare_flags, false);

  SelmapFlags selmap_flags;
  CLI::App* selmap_cmd = app.add_subcommand(
      "selmap", "trace one iteration of each selection strategy and render "
                "the rank map");
  selmap_cmd->add_option("--function", selmap_flags.function, "objective");
  selmap_cmd->add_option("--dim", selmap_flags.dim, "problem dimension");
  selmap_cmd->add_option("--seed", selmap_flags.seed, "seed");
  selmap_cmd->add_option("--xi", selmap_flags.xi, "evaporation rate");
  selmap_cmd->add_option("--metric", selmap_flags.metric, "distance metric");
  selmap_cmd->add_option("--formula", selmap_flags.formula, "paper|standard");
  selmap_cmd->add_option("--out", selmap_flags.out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) return do_run(run_cmd, run_flags);
    if (sel_cmd->parsed()) return do_study_selection(selection_flags);
    if (met_cmd->parsed()) return do_study_metrics(metrics_flags);
    if (evap_cmd->parsed()) return do_study_evaporation(evaporation_flags);
    if (cmp_cmd->parsed()) return do_study_compare(compare_flags);
    if (selmap_cmd->parsed()) return do_selmap(selmap_flags);
  } catch (const ExperimentAbort& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "partial results and a failure marker were written\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
