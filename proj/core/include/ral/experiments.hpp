#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ral/core.hpp"
#include "ral/sampling.hpp"

namespace ral {

enum class Objective { GreedyMax, ExactMax, ExactMin };

std::string_view to_string(Objective objective);

struct ExperimentConfig {
  std::vector<std::int64_t> n_values;
  std::int64_t trials = 2;
  std::uint64_t master_seed = 0;
  DistributionKind dist = DistributionKind::Gaussian;
  Objective objective = Objective::GreedyMax;
  unsigned workers = 0;  // 0 = hardware concurrency

  /// Throws DomainError when trials < 2, any n < 1, the n list is empty, or
  /// an exact objective is requested for n > kMaxExactN.
  void validate() const;

  static constexpr std::int64_t kMaxExactN = 5000;
};

struct ExperimentRecord {
  std::int64_t n = 0;
  std::int64_t trial = 0;
  double value = 0.0;
  double elapsed_ms = 0.0;
  RunSeed seed;
};

struct RatioReport {
  std::int64_t n = 0;
  double mean_value = 0.0;
  double std_error = 0.0;
  double ratio = 0.0;
  double predicted_ratio = 0.0;
};

struct CltReport {
  std::int64_t n = 0;
  double ks_to_phi = 0.0;               // standardized by the oracle A_n, B_n
  double ks_sample_standardized = 0.0;  // standardized by sample mean and std
  double sample_mean = 0.0;
  double sample_var = 0.0;
  double predicted_A = 0.0;
  double predicted_Bsq_exact = 0.0;
};

struct ParisiReport {
  std::int64_t n = 0;
  double mc_min_mean = 0.0;
  double std_error = 0.0;
  double parisi_value = 0.0;
};

struct UniformReport {
  std::int64_t n = 0;
  double mc_min_mean = 0.0;
  double std_error = 0.0;
  double steele_value = 0.0;
};

struct GapRecord {
  std::int64_t n = 0;
  std::int64_t trial = 0;
  double greedy = 0.0;
  double exact = 0.0;
};

struct GapReport {
  std::int64_t n = 0;
  double greedy_mean = 0.0;
  double exact_mean = 0.0;
  double gap = 0.0;
  double gap_std_error = 0.0;
};

/// Seed trial index for (slot of n in n_values, trial): slot * 2^32 + trial.
std::uint64_t pairing_index(std::size_t n_slot, std::int64_t trial) noexcept;

/// Runs `task(k)` for k in [0, count) on `workers` threads (0 = auto). The
/// first exception stops the pool and is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& task);

/// Resolves 0 to the hardware concurrency (at least 1).
unsigned resolve_workers(unsigned requested) noexcept;

/// Every (n, trial) pair, sorted by (n slot, trial) regardless of scheduling.
std::vector<ExperimentRecord> run_trials(const ExperimentConfig& cfg);

/// Requires GreedyMax or ExactMax, Gaussian costs and n >= 2.
std::vector<RatioReport> ratio_experiment(const ExperimentConfig& cfg);
/// Same, reusing already computed records.
std::vector<RatioReport> ratio_report(const ExperimentConfig& cfg,
                                      const std::vector<ExperimentRecord>& records);

/// Requires GreedyMax, Gaussian, exactly one n and trials >= 1000.
CltReport clt_experiment(const ExperimentConfig& cfg);
CltReport clt_report(const ExperimentConfig& cfg, const std::vector<ExperimentRecord>& records);

/// Requires ExactMin with exponential costs.
std::vector<ParisiReport> parisi_experiment(const ExperimentConfig& cfg);
std::vector<ParisiReport> parisi_report(const ExperimentConfig& cfg,
                                        const std::vector<ExperimentRecord>& records);

/// Requires ExactMin with uniform costs and n >= 2.
std::vector<UniformReport> uniform_experiment(const ExperimentConfig& cfg);
std::vector<UniformReport> uniform_report(const ExperimentConfig& cfg,
                                          const std::vector<ExperimentRecord>& records);

/// Greedy and exact maximum on the same Gaussian matrix per trial.
/// Requires Gaussian costs and n <= 2000; the objective field is ignored.
std::vector<GapRecord> run_paired_trials(const ExperimentConfig& cfg);
std::vector<GapReport> optimality_gap(const ExperimentConfig& cfg);
std::vector<GapReport> gap_report(const ExperimentConfig& cfg, const std::vector<GapRecord>& records);

}  // namespace ral
