#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ral/core.hpp"
#include "ral/experiments.hpp"
#include "ral/report.hpp"

namespace ral::cli {

/// Bad command line; the process exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { Greedy, Solve, Asymptotics, Oracle, Simulate, Clt, Parisi, Uniform, Gap, Plot };

std::string_view to_string(Subcommand s);

struct CliConfig {
  Subcommand subcommand = Subcommand::Asymptotics;
  std::vector<std::int64_t> n_values;
  std::vector<std::int64_t> m_values;
  std::int64_t trials = 0;
  std::optional<std::uint64_t> seed;
  DistributionKind dist = DistributionKind::Gaussian;
  Objective objective = Objective::GreedyMax;
  unsigned workers = 0;
  std::optional<std::filesystem::path> in_path;
  std::optional<std::filesystem::path> out_path;
  Format format = Format::Csv;
  bool records = false;
  std::string y_column = "ratio";

  bool help = false;
  std::string help_text;

  /// The experiment settings this command line describes.
  ExperimentConfig experiment() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// `args` excludes the program name. Throws UsageError naming the offending
/// flag; a --help request returns with help = true.
CliConfig parse_args(std::span<const std::string> args);

/// Executes a parsed command. Throws ral::Error on runtime failures.
void execute(const CliConfig& cfg, std::istream& in, std::ostream& out);

/// parse_args + execute with the exit-status mapping 0 / 1 / 2.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ral::cli
