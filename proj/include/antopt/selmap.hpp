#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "antopt/selection.hpp"

namespace antopt {

/// One traced strategy to draw on the selection map.
struct LabeledTrace {
  std::string label;   // file-name friendly, e.g. "rws-fitval"
  std::string color;   // SVG stroke
  SelectionTrace trace;
};

/// Writes selmap_<label>.csv per trace plus one selmap.svg: concentric rings
/// per rank (rank 1 at the center, radius grows with rank - 1) and one
/// polyline through the selection points of each strategy, stroked in the
/// strategy's color. archive_size fixes the ring count.
void export_selection_map(std::span<const LabeledTrace> traces,
                          int archive_size,
                          const std::filesystem::path& out_dir);

}  // namespace antopt
