#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ral::csv {

using Row = std::vector<std::string>;

/// Parses RFC-4180 text: quoted fields, doubled quotes, CRLF or LF endings.
/// A trailing newline does not produce an empty record. Throws ParseError on
/// an unterminated quote.
std::vector<Row> parse(std::string_view text);

/// Quotes a field only when it contains a comma, quote, CR or LF.
std::string quote(std::string_view field);

/// Shortest-safe decimal with 17 significant digits; round-trips any double.
std::string format_double(double v);

/// Strict decimal parse of the whole field. Throws ParseError.
double parse_double(std::string_view field);

}  // namespace ral::csv
