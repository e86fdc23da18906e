#include "ral/matrix_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>

#include "ral/csv.hpp"

namespace ral {

std::string matrix_to_csv(const CostMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      if (j) out.push_back(',');
      out += csv::format_double(m(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

CostMatrix matrix_from_csv(std::string_view text, DistributionKind label) {
  std::vector<std::vector<double>> rows;
  for (const auto& rec : csv::parse(text)) {
    if (rec.size() == 1 && rec.front().find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> row;
    row.reserve(rec.size());
    for (const auto& f : rec) row.push_back(csv::parse_double(f));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidSize("empty matrix input");
  return CostMatrix::from_rows(rows, label);
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string permutation_to_string(const Permutation& p) {
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (k) out.push_back(',');
    out += std::to_string(p[k] + 1);
  }
  return out;
}

Permutation permutation_from_string(std::string_view text) {
  std::vector<std::size_t> idx;
  for (const auto& rec : csv::parse(text)) {
    for (const auto& f : rec) {
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc{} || ptr != f.data() + f.size() || v == 0) {
        throw ParseError("invalid permutation index: '" + f + "'");
      }
      idx.push_back(v);
    }
  }
  auto p = Permutation::from_one_based(idx);
  if (!validate_permutation(p, idx.size())) throw InvalidPermutation("not a permutation: " + std::string(text));
  return p;
}

}  // namespace ral
