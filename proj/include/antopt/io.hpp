#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "antopt/harness.hpp"

namespace antopt {

/// Serializes a real with 17 significant digits (round-trip exact).
std::string format_real(double value);

/// Creates parent directories as needed; throws IoError on failure.
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

/// Static labels shared by every row of one experiment's output.
struct RunLabel {
  std::string function;
  std::string optimizer;
  std::string selection;  // empty for pso/de
  std::string basis;      // empty for pso/de
  std::string metric;     // empty for pso/de
  std::string xi;         // empty for pso/de
  int dimension = 0;
  int iterations = 0;
};

RunLabel run_label(const ExperimentConfig& config);

/// Header: function,optimizer,selection,basis,metric,xi,dim,trial,seed,
/// final_best,iterations,elapsed_ms
std::string per_trial_csv(const RunLabel& label,
                          std::span<const TrialRecord> records);
std::string per_trial_csv_header();
std::string per_trial_csv_rows(const RunLabel& label,
                               std::span<const TrialRecord> records);

/// Header: function,optimizer,mean,variance,trials
std::string aggregate_csv_header();
std::string aggregate_csv_row(const std::string& function,
                              const std::string& optimizer, double mean,
                              double variance, int trials);

/// Header: iteration,l,i,selected_rank
std::string trace_csv(const SelectionTrace& trace);

std::string per_trial_json(const RunLabel& label,
                           std::span<const TrialRecord> records);
std::string aggregate_json(const RunLabel& label, const AggregateResult& result);

}  // namespace antopt
