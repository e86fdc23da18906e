#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ral/report.hpp"

namespace ral {

/// Self-contained SVG: one polyline of `y_column` against log10(n) and one
/// horizontal reference line at y = 1. Throws SchemaError when the columns
/// are missing or there are no usable rows (n > 0, finite y).
std::string render_convergence_svg(const Table& table, std::string_view y_column = "ratio");

/// Reads the report CSV at `report_csv` and writes the chart to `out_svg`.
void plot_convergence(const std::filesystem::path& report_csv, const std::filesystem::path& out_svg,
                      std::string_view y_column = "ratio");

}  // namespace ral
