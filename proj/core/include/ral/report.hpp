#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ral/experiments.hpp"
#include "ral/stats.hpp"

namespace ral {

/// Empty cell (undefined value), integer, unsigned, real or text.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

/// Column-named rows; the common shape every report serializes through.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { Csv, Json };

/// Header plus one line per row, RFC-4180 quoting, LF endings, reals with 17
/// significant digits, empty cells for undefined values.
std::string to_csv(const Table& table);
/// Array of objects keyed by column name; undefined and non-finite reals are null.
std::string to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Reads CSV produced by to_csv back; numeric-looking cells become doubles.
Table table_from_csv(std::string_view text);
/// Index of `name` in table.columns, or nullopt.
std::optional<std::size_t> column_index(const Table& table, std::string_view name);

/// Writes to `path` when given, otherwise to `fallback`. Returns the byte
/// count. Throws IoError when the file cannot be written.
std::size_t emit_report(const Table& table, Format format,
                        const std::optional<std::filesystem::path>& path, std::ostream& fallback);

/// Writes `text` to `path`; throws IoError.
void write_file(const std::filesystem::path& path, std::string_view text);
/// Reads the whole file; throws IoError.
std::string read_file(const std::filesystem::path& path);

Table to_table(std::span<const RatioReport> rows);
Table to_table(const CltReport& row);
Table to_table(std::span<const ParisiReport> rows);
Table to_table(std::span<const UniformReport> rows);
Table to_table(std::span<const GapReport> rows);
Table to_table(std::span<const ExperimentRecord> rows);
Table to_table(std::span<const GapRecord> rows);
Table to_table(std::span<const MaxMoments> rows);

/// Closed-form constants per n: leading_order, fernique_upper, A_n, B_n_sq,
/// parisi_sum, steele_expansion. Entries undefined at that n are left empty.
Table asymptotics_table(std::span<const std::int64_t> n_values);

}  // namespace ral
