#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ral/core.hpp"

namespace ral {

/// One row per line, comma separated, 17 significant digits, LF endings.
std::string matrix_to_csv(const CostMatrix& m);

/// Inverse of matrix_to_csv. Blank lines are skipped. Throws ParseError on
/// malformed numbers and InvalidSize if the grid is not square.
CostMatrix matrix_from_csv(std::string_view text,
                           DistributionKind label = DistributionKind::Gaussian);

std::string read_all(std::istream& in);

/// "3,1,2" style 1-based serialization.
std::string permutation_to_string(const Permutation& p);
Permutation permutation_from_string(std::string_view text);

}  // namespace ral
