#include "antopt/selmap.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "antopt/errors.hpp"
#include "antopt/io.hpp"

namespace antopt {

namespace {

constexpr double canvas = 800.0;
constexpr double center = canvas / 2.0;
constexpr double outer_radius = 330.0;

double ring_radius(int rank, int archive_size) {
  if (archive_size < 2) return 0.0;
  return outer_radius * static_cast<double>(rank - 1) /
         static_cast<double>(archive_size - 1);
}

std::string polyline_points(const SelectionTrace& trace, int archive_size) {
  std::ostringstream out;
  const std::size_t count = trace.size();
  for (std::size_t t = 0; t < count; ++t) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) /
                         static_cast<double>(count);
    const double r = ring_radius(trace[t].selected_rank, archive_size);
    const double x = center + r * std::cos(angle);
    const double y = center - r * std::sin(angle);
    if (t) out << ' ';
    out << std::round(x * 100.0) / 100.0 << ',' << std::round(y * 100.0) / 100.0;
  }
  return out.str();
}

}  // namespace

void export_selection_map(std::span<const LabeledTrace> traces,
                          int archive_size,
                          const std::filesystem::path& out_dir) {
  if (traces.empty()) {
    throw ArgumentError("selection map: need at least one trace");
  }
  for (const LabeledTrace& t : traces) {
    if (t.trace.empty()) {
      throw ArgumentError("selection map: empty trace for " + t.label);
    }
  }
  if (archive_size < 2) {
    throw ArgumentError("selection map: archive size must be >= 2");
  }

  for (const LabeledTrace& t : traces) {
    write_text_file(out_dir / ("selmap_" + t.label + ".csv"),
                    trace_csv(t.trace));
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas
      << "\" height=\"" << canvas << "\" viewBox=\"0 0 " << canvas << ' '
      << canvas << "\">\n"
      << "  <rect width=\"" << canvas << "\" height=\"" << canvas
      << "\" fill=\"white\"/>\n";

  // Rank rings: the center is rank 1, labeled 0; radius grows with rank.
  svg << "  <g stroke=\"#c8c8c8\" fill=\"none\" stroke-width=\"1\">\n";
  for (int rank = 2; rank <= archive_size; ++rank) {
    svg << "    <circle cx=\"" << center << "\" cy=\"" << center << "\" r=\""
        << ring_radius(rank, archive_size) << "\"/>\n";
  }
  svg << "  </g>\n";
  svg << "  <circle cx=\"" << center << "\" cy=\"" << center
      << "\" r=\"2\" fill=\"#888888\"/>\n";
  svg << "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#888888\">\n";
  for (int rank = 1; rank <= archive_size; ++rank) {
    const double y = center - ring_radius(rank, archive_size);
    svg << "    <text x=\"" << center + 4.0 << "\" y=\"" << y - 3.0 << "\">"
        << rank - 1 << "</text>\n";
  }
  svg << "  </g>\n";

  for (const LabeledTrace& t : traces) {
    svg << "  <polyline fill=\"none\" stroke=\"" << t.color
        << "\" stroke-width=\"1\" stroke-opacity=\"0.75\" points=\""
        << polyline_points(t.trace, archive_size) << "\"/>\n";
  }

  svg << "  <g font-family=\"sans-serif\" font-size=\"14\">\n";
  double legend_y = 24.0;
  for (const LabeledTrace& t : traces) {
    svg << "    <line x1=\"16\" y1=\"" << legend_y - 4.0
        << "\" x2=\"48\" y2=\"" << legend_y - 4.0 << "\" stroke=\"" << t.color
        << "\" stroke-width=\"2\"/>\n"
        << "    <text x=\"54\" y=\"" << legend_y << "\">" << t.label
        << "</text>\n";
    legend_y += 20.0;
  }
  svg << "  </g>\n</svg>\n";

  write_text_file(out_dir / "selmap.svg", svg.str());
}

}  // namespace antopt
