#include "ral/report.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "ral/asymptotics.hpp"
#include "ral/csv.hpp"
#include "ral/errors.hpp"

namespace ral {

namespace {

std::string cell_to_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return "";
        else if constexpr (std::is_same_v<T, double>) return csv::format_double(v);
        else if constexpr (std::is_same_v<T, std::string>) return csv::quote(v);
        else return std::to_string(v);
      },
      c);
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
        else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else return v;
      },
      c);
}

template <typename T>
Cell opt(T (*fn)(std::int64_t), std::int64_t n) {
  try {
    return fn(n);
  } catch (const DomainError&) {
    return std::monostate{};
  }
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (k) out.push_back(',');
    out += csv::quote(table.columns[k]);
  }
  out.push_back('\n');
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out.push_back(',');
      out += cell_to_csv(row[k]);
    }
    out.push_back('\n');
  }
  return out;
}

std::string to_json(const Table& table) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < table.columns.size() && k < row.size(); ++k) {
      obj[table.columns[k]] = cell_to_json(row[k]);
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

std::string render(const Table& table, Format format) {
  return format == Format::Csv ? to_csv(table) : to_json(table);
}

Table table_from_csv(std::string_view text) {
  auto rows = csv::parse(text);
  if (rows.empty()) throw SchemaError("CSV has no header row");
  Table t;
  t.columns = rows.front();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::vector<Cell> cells;
    for (auto& f : rows[r]) {
      if (f.empty()) {
        cells.emplace_back(std::monostate{});
        continue;
      }
      try {
        cells.emplace_back(csv::parse_double(f));
      } catch (const ParseError&) {
        cells.emplace_back(std::move(f));
      }
    }
    t.rows.push_back(std::move(cells));
  }
  return t;
}

std::optional<std::size_t> column_index(const Table& table, std::string_view name) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    if (table.columns[k] == name) return k;
  }
  return std::nullopt;
}

void write_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t emit_report(const Table& table, Format format,
                        const std::optional<std::filesystem::path>& path, std::ostream& fallback) {
  const std::string text = render(table, format);
  if (path) {
    write_file(*path, text);
  } else {
    fallback << text;
    fallback.flush();
    if (!fallback) throw IoError("failed writing report to output stream");
  }
  return text.size();
}

Table to_table(std::span<const RatioReport> rows) {
  Table t{{"n", "mean_value", "std_error", "ratio", "predicted_ratio"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.n, r.mean_value, r.std_error, r.ratio, r.predicted_ratio});
  }
  return t;
}

Table to_table(const CltReport& r) {
  Table t{{"n", "ks_to_phi", "ks_sample_standardized", "sample_mean", "sample_var", "predicted_A",
           "predicted_Bsq_exact"},
          {}};
  t.rows.push_back({r.n, r.ks_to_phi, r.ks_sample_standardized, r.sample_mean, r.sample_var,
                    r.predicted_A, r.predicted_Bsq_exact});
  return t;
}

Table to_table(std::span<const ParisiReport> rows) {
  Table t{{"n", "mc_min_mean", "std_error", "parisi_value"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.n, r.mc_min_mean, r.std_error, r.parisi_value});
  return t;
}

Table to_table(std::span<const UniformReport> rows) {
  Table t{{"n", "mc_min_mean", "std_error", "steele_value"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.n, r.mc_min_mean, r.std_error, r.steele_value});
  return t;
}

Table to_table(std::span<const GapReport> rows) {
  Table t{{"n", "greedy_mean", "exact_mean", "gap", "gap_std_error"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.n, r.greedy_mean, r.exact_mean, r.gap, r.gap_std_error});
  }
  return t;
}

Table to_table(std::span<const ExperimentRecord> rows) {
  Table t{{"n", "trial", "value", "elapsed_ms", "seed_master", "seed_trial"}, {}};
  for (const auto& r : rows) {
    t.rows.push_back({r.n, r.trial, r.value, r.elapsed_ms, r.seed.master, r.seed.trial});
  }
  return t;
}

Table to_table(std::span<const GapRecord> rows) {
  Table t{{"n", "trial", "greedy", "exact"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.n, r.trial, r.greedy, r.exact});
  return t;
}

Table to_table(std::span<const MaxMoments> rows) {
  Table t{{"m", "mean", "variance", "third_abs_central"}, {}};
  for (const auto& r : rows) t.rows.push_back({r.m, r.mean, r.variance, r.third_abs_central});
  return t;
}

Table asymptotics_table(std::span<const std::int64_t> n_values) {
  Table t{{"n", "leading_order", "fernique_upper", "A_n", "B_n_sq", "parisi_sum",
           "steele_expansion"},
          {}};
  for (auto n : n_values) {
    std::vector<Cell> row{n, opt(&leading_order, n), opt(&fernique_upper, n)};
    try {
      const auto c = clt_constants(n);
      row.emplace_back(c.A_n);
      row.emplace_back(c.B_n_sq);
    } catch (const DomainError&) {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
    row.push_back(opt(&parisi_sum, n));
    row.push_back(opt(&steele_expansion, n));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace ral
