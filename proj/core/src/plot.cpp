#include "ral/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "ral/errors.hpp"

namespace ral {

namespace {

constexpr double kWidth = 640, kHeight = 400;
constexpr double kLeft = 70, kRight = 20, kTop = 20, kBottom = 50;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::optional<double> numeric(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  if (const auto* u = std::get_if<std::uint64_t>(&c)) return static_cast<double>(*u);
  return std::nullopt;
}

}  // namespace

std::string render_convergence_svg(const Table& table, std::string_view y_column) {
  const auto xi = column_index(table, "n");
  const auto yi = column_index(table, y_column);
  if (!xi) throw SchemaError("report has no 'n' column");
  if (!yi) throw SchemaError("report has no '" + std::string(y_column) + "' column");

  std::vector<std::pair<double, double>> pts;
  for (const auto& row : table.rows) {
    if (row.size() <= std::max(*xi, *yi)) continue;
    const auto x = numeric(row[*xi]);
    const auto y = numeric(row[*yi]);
    if (x && y && *x > 0 && std::isfinite(*y)) pts.emplace_back(std::log10(*x), *y);
  }
  if (pts.empty()) throw SchemaError("report has no plottable rows");
  std::sort(pts.begin(), pts.end());

  double x0 = pts.front().first, x1 = pts.back().first;
  if (x1 - x0 < 1e-9) {
    x0 -= 0.5;
    x1 += 0.5;
  }
  double y0 = 1.0, y1 = 1.0;
  for (const auto& [x, y] : pts) {
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  const double pad = std::max(0.05 * (y1 - y0), 0.05);
  y0 -= pad;
  y1 += pad;

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto sy = [&](double y) { return kTop + (y1 - y) / (y1 - y0) * ph; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(kWidth) + "\" height=\"" + fmt(kHeight) +
         "\" fill=\"white\"/>\n";
  // Axes as one path so the only <line> element is the reference.
  svg += "<path class=\"axes\" d=\"M" + fmt(kLeft) + " " + fmt(kTop) + " V" + fmt(kTop + ph) +
         " H" + fmt(kLeft + pw) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int decade = static_cast<int>(std::ceil(x0)); decade <= static_cast<int>(std::floor(x1));
       ++decade) {
    svg += "<text x=\"" + fmt(sx(decade)) + "\" y=\"" + fmt(kTop + ph + 18) +
           "\" font-size=\"12\" text-anchor=\"middle\">1e" + std::to_string(decade) + "</text>\n";
  }
  for (double y : {y0 + pad, 1.0, y1 - pad}) {
    svg += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(sy(y) + 4) +
           "\" font-size=\"12\" text-anchor=\"end\">" + label(y) + "</text>\n";
  }
  svg += "<text x=\"" + fmt(kLeft + pw / 2) + "\" y=\"" + fmt(kHeight - 8) +
         "\" font-size=\"13\" text-anchor=\"middle\">n (log scale)</text>\n";
  svg += "<text x=\"14\" y=\"" + fmt(kTop + ph / 2) + "\" font-size=\"13\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 14 " + fmt(kTop + ph / 2) + ")\">" + xml_escape(y_column) +
         "</text>\n";
  svg += "<line class=\"reference\" x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(sy(1.0)) + "\" x2=\"" +
         fmt(kLeft + pw) + "\" y2=\"" + fmt(sy(1.0)) +
         "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  svg += "<polyline class=\"series\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) svg += ' ';
    svg += fmt(sx(pts[k].first)) + "," + fmt(sy(pts[k].second));
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

void plot_convergence(const std::filesystem::path& report_csv, const std::filesystem::path& out_svg,
                      std::string_view y_column) {
  const Table t = table_from_csv(read_file(report_csv));
  write_file(out_svg, render_convergence_svg(t, y_column));
}

}  // namespace ral
