#include "antopt/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "antopt/errors.hpp"

namespace antopt {

std::string format_real(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::error_code ec;
  const auto parent = path.parent_path();
  if (!parent.empty()) {
    std::filesystem::create_directories(parent, ec);
    if (ec) {
      throw IoError("cannot create directory " + parent.string() + ": " +
                    ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

RunLabel run_label(const ExperimentConfig& config) {
  RunLabel label;
  label.function = objective_name(config.objective);
  label.optimizer = optimizer_kind_name(config.optimizer);
  label.dimension = config.dimension;
  switch (config.optimizer) {
    case OptimizerKind::Pso:
      label.iterations = config.pso.max_iterations;
      break;
    case OptimizerKind::De:
      label.iterations = config.de.max_iterations;
      break;
    default: {
      const AcoParams params = preset_aco_params(config.optimizer, config.aco);
      label.selection = selection_method_name(params.selection.method);
      label.basis = probability_basis_name(params.selection.basis);
      label.metric = params.metric.name();
      label.xi = format_real(params.xi.value());
      label.iterations = params.max_iterations;
      break;
    }
  }
  return label;
}

namespace {

constexpr const char* per_trial_header =
    "function,optimizer,selection,basis,metric,xi,dim,trial,seed,final_best,"
    "iterations,elapsed_ms\n";

void append_per_trial_row(std::ostringstream& out, const RunLabel& label,
                          const TrialRecord& record) {
  out << label.function << ',' << label.optimizer << ',' << label.selection
      << ',' << label.basis << ',' << label.metric << ',' << label.xi << ','
      << label.dimension << ',' << record.trial << ',' << record.seed << ','
      << format_real(record.result.final_best) << ',' << label.iterations
      << ',' << format_real(record.result.elapsed_ms) << '\n';
}

}  // namespace

std::string per_trial_csv(const RunLabel& label,
                          std::span<const TrialRecord> records) {
  return per_trial_csv_header() + per_trial_csv_rows(label, records);
}

std::string per_trial_csv_header() { return per_trial_header; }

std::string per_trial_csv_rows(const RunLabel& label,
                               std::span<const TrialRecord> records) {
  std::ostringstream out;
  for (const TrialRecord& record : records) {
    append_per_trial_row(out, label, record);
  }
  return out.str();
}

std::string aggregate_csv_header() {
  return "function,optimizer,mean,variance,trials\n";
}

std::string aggregate_csv_row(const std::string& function,
                              const std::string& optimizer, double mean,
                              double variance, int trials) {
  std::ostringstream out;
  out << function << ',' << optimizer << ',' << format_real(mean) << ','
      << format_real(variance) << ',' << trials << '\n';
  return out.str();
}

std::string trace_csv(const SelectionTrace& trace) {
  std::ostringstream out;
  out << "iteration,l,i,selected_rank\n";
  for (const SelectionRecord& r : trace) {
    out << r.iteration << ',' << r.solution_index << ',' << r.variable_index
        << ',' << r.selected_rank << '\n';
  }
  return out.str();
}

std::string per_trial_json(const RunLabel& label,
                           std::span<const TrialRecord> records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRecord& record : records) {
    rows.push_back({{"function", label.function},
                    {"optimizer", label.optimizer},
                    {"selection", label.selection},
                    {"basis", label.basis},
                    {"metric", label.metric},
                    {"xi", label.xi},
                    {"dim", label.dimension},
                    {"trial", record.trial},
                    {"seed", record.seed},
                    {"final_best", record.result.final_best},
                    {"iterations", label.iterations},
                    {"elapsed_ms", record.result.elapsed_ms}});
  }
  return nlohmann::json{{"trials", rows}}.dump(2) + "\n";
}

std::string aggregate_json(const RunLabel& label,
                           const AggregateResult& result) {
  nlohmann::json doc{{"function", label.function},
                     {"optimizer", label.optimizer},
                     {"mean", result.mean},
                     {"variance", result.variance},
                     {"trials", result.records.size()}};
  return doc.dump(2) + "\n";
}

}  // namespace antopt
