#include "ral/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ral/asymptotics.hpp"
#include "ral/greedy.hpp"
#include "ral/solver.hpp"
#include "ral/stats.hpp"

namespace ral {

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::GreedyMax: return "greedy";
    case Objective::ExactMax: return "max";
    case Objective::ExactMin: return "min";
  }
  return "unknown";
}

void ExperimentConfig::validate() const {
  if (n_values.empty()) throw DomainError("experiment needs at least one n");
  if (trials < 2) throw DomainError("experiment needs trials >= 2");
  for (auto n : n_values) {
    if (n < 1) throw DomainError("every n must be >= 1 (got " + std::to_string(n) + ")");
    if (objective != Objective::GreedyMax && n > kMaxExactN) {
      throw DomainError("exact objectives are limited to n <= " + std::to_string(kMaxExactN) +
                        " (got " + std::to_string(n) + ")");
    }
  }
  if (trials > (std::int64_t{1} << 32)) throw DomainError("at most 2^32 trials per n");
}

std::uint64_t pairing_index(std::size_t n_slot, std::int64_t trial) noexcept {
  return (static_cast<std::uint64_t>(n_slot) << 32) + static_cast<std::uint64_t>(trial);
}

unsigned resolve_workers(unsigned requested) noexcept {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& task) {
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t k = next.fetch_add(1, std::memory_order_relaxed);
      if (k >= count) return;
      try {
        task(k);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

double run_objective(Objective objective, std::size_t n, DistributionKind dist, RunSeed seed) {
  switch (objective) {
    case Objective::GreedyMax: return greedy_assign_streamed(n, dist, seed).value;
    case Objective::ExactMax: return hungarian_max(gen_matrix(n, dist, seed)).value;
    case Objective::ExactMin: return hungarian_min(gen_matrix(n, dist, seed)).value;
  }
  return 0.0;
}

// Values of the records for the n in slot `slot`, in trial order.
std::vector<double> values_for_slot(const ExperimentConfig& cfg,
                                    const std::vector<ExperimentRecord>& records,
                                    std::size_t slot) {
  const auto begin = records.begin() + static_cast<std::ptrdiff_t>(slot * cfg.trials);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(cfg.trials));
  for (auto it = begin; it != begin + cfg.trials; ++it) values.push_back(it->value);
  return values;
}

void check_record_shape(const ExperimentConfig& cfg, std::size_t count) {
  if (count != cfg.n_values.size() * static_cast<std::size_t>(cfg.trials)) {
    throw DimensionMismatch("record count does not match the experiment configuration");
  }
}

double predicted_greedy_mean(const std::vector<MaxMomentSums>& prefix, std::int64_t n) {
  return prefix[static_cast<std::size_t>(n - 1)].mean;
}

}  // namespace

std::vector<ExperimentRecord> run_trials(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t per_n = static_cast<std::size_t>(cfg.trials);
  std::vector<ExperimentRecord> records(cfg.n_values.size() * per_n);
  parallel_for(records.size(), cfg.workers, [&](std::size_t k) {
    const std::size_t slot = k / per_n;
    const auto trial = static_cast<std::int64_t>(k % per_n);
    const auto n = cfg.n_values[slot];
    const RunSeed seed{cfg.master_seed, pairing_index(slot, trial)};
    const auto start = std::chrono::steady_clock::now();
    const double value = run_objective(cfg.objective, static_cast<std::size_t>(n), cfg.dist, seed);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    records[k] = ExperimentRecord{n, trial, value, elapsed.count(), seed};
  });
  return records;
}

std::vector<RatioReport> ratio_report(const ExperimentConfig& cfg,
                                      const std::vector<ExperimentRecord>& records) {
  check_record_shape(cfg, records.size());
  const auto n_max = *std::max_element(cfg.n_values.begin(), cfg.n_values.end());
  const auto prefix = exact_max_moment_prefix(n_max);
  std::vector<RatioReport> out;
  for (std::size_t slot = 0; slot < cfg.n_values.size(); ++slot) {
    const auto n = cfg.n_values[slot];
    const auto s = summarize(values_for_slot(cfg, records, slot));
    const double lead = leading_order(n);
    out.push_back({n, s.mean, s.std_error, s.mean / lead, predicted_greedy_mean(prefix, n) / lead});
  }
  return out;
}

std::vector<RatioReport> ratio_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.objective == Objective::ExactMin) {
    throw DomainError("ratio experiment needs a maximizing objective");
  }
  if (cfg.dist != DistributionKind::Gaussian) {
    throw DomainError("ratio experiment needs Gaussian costs");
  }
  for (auto n : cfg.n_values) {
    if (n < 2) throw DomainError("ratio experiment needs n >= 2 (n sqrt(2 log n) vanishes at n = 1)");
  }
  return ratio_report(cfg, run_trials(cfg));
}

CltReport clt_report(const ExperimentConfig& cfg, const std::vector<ExperimentRecord>& records) {
  check_record_shape(cfg, records.size());
  const auto n = cfg.n_values.front();
  const auto sums = exact_max_moment_prefix(n).back();
  std::vector<double> values = values_for_slot(cfg, records, 0);
  const auto s = summarize(values);

  CltReport r;
  r.n = n;
  r.sample_mean = s.mean;
  r.sample_var = s.variance;
  r.predicted_A = sums.mean;
  r.predicted_Bsq_exact = sums.variance;

  std::sort(values.begin(), values.end());
  const double b = std::sqrt(sums.variance);
  std::vector<double> z(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) z[k] = (values[k] - sums.mean) / b;
  r.ks_to_phi = ks_distance(z, phi_cdf);
  const double sd = std::sqrt(s.variance);
  for (std::size_t k = 0; k < values.size(); ++k) z[k] = (values[k] - s.mean) / sd;
  r.ks_sample_standardized = ks_distance(z, phi_cdf);
  return r;
}

CltReport clt_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.objective != Objective::GreedyMax || cfg.dist != DistributionKind::Gaussian) {
    throw DomainError("CLT experiment needs the greedy objective on Gaussian costs");
  }
  if (cfg.n_values.size() != 1) throw DomainError("CLT experiment takes exactly one n");
  if (cfg.trials < 1000) throw DomainError("CLT experiment needs trials >= 1000");
  return clt_report(cfg, run_trials(cfg));
}

std::vector<ParisiReport> parisi_report(const ExperimentConfig& cfg,
                                        const std::vector<ExperimentRecord>& records) {
  check_record_shape(cfg, records.size());
  std::vector<ParisiReport> out;
  for (std::size_t slot = 0; slot < cfg.n_values.size(); ++slot) {
    const auto s = summarize(values_for_slot(cfg, records, slot));
    out.push_back({cfg.n_values[slot], s.mean, s.std_error, parisi_sum(cfg.n_values[slot])});
  }
  return out;
}

std::vector<ParisiReport> parisi_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.objective != Objective::ExactMin || cfg.dist != DistributionKind::Exponential) {
    throw DomainError("Parisi experiment needs the exact minimum on exponential costs");
  }
  return parisi_report(cfg, run_trials(cfg));
}

std::vector<UniformReport> uniform_report(const ExperimentConfig& cfg,
                                          const std::vector<ExperimentRecord>& records) {
  check_record_shape(cfg, records.size());
  std::vector<UniformReport> out;
  for (std::size_t slot = 0; slot < cfg.n_values.size(); ++slot) {
    const auto s = summarize(values_for_slot(cfg, records, slot));
    out.push_back({cfg.n_values[slot], s.mean, s.std_error, steele_expansion(cfg.n_values[slot])});
  }
  return out;
}

std::vector<UniformReport> uniform_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.objective != Objective::ExactMin || cfg.dist != DistributionKind::Uniform) {
    throw DomainError("uniform experiment needs the exact minimum on uniform costs");
  }
  for (auto n : cfg.n_values) {
    if (n < 2) throw DomainError("uniform experiment needs n >= 2");
  }
  return uniform_report(cfg, run_trials(cfg));
}

std::vector<GapRecord> run_paired_trials(const ExperimentConfig& cfg) {
  ExperimentConfig checked = cfg;
  checked.objective = Objective::ExactMax;
  checked.validate();
  if (cfg.dist != DistributionKind::Gaussian) throw DomainError("gap experiment needs Gaussian costs");
  for (auto n : cfg.n_values) {
    if (n > 2000) throw DomainError("gap experiment is limited to n <= 2000");
  }
  const std::size_t per_n = static_cast<std::size_t>(cfg.trials);
  std::vector<GapRecord> records(cfg.n_values.size() * per_n);
  parallel_for(records.size(), cfg.workers, [&](std::size_t k) {
    const std::size_t slot = k / per_n;
    const auto trial = static_cast<std::int64_t>(k % per_n);
    const auto n = cfg.n_values[slot];
    const auto m = gen_matrix(static_cast<std::size_t>(n), cfg.dist,
                              RunSeed{cfg.master_seed, pairing_index(slot, trial)});
    records[k] = GapRecord{n, trial, greedy_assign(m).value, hungarian_max(m).value};
  });
  return records;
}

std::vector<GapReport> gap_report(const ExperimentConfig& cfg, const std::vector<GapRecord>& records) {
  check_record_shape(cfg, records.size());
  const std::size_t per_n = static_cast<std::size_t>(cfg.trials);
  std::vector<GapReport> out;
  for (std::size_t slot = 0; slot < cfg.n_values.size(); ++slot) {
    MomentAccumulator greedy, exact, gap;
    for (std::size_t k = slot * per_n; k < (slot + 1) * per_n; ++k) {
      greedy.add(records[k].greedy);
      exact.add(records[k].exact);
      gap.add(records[k].exact - records[k].greedy);
    }
    out.push_back({cfg.n_values[slot], greedy.mean(), exact.mean(), gap.mean(),
                   std::sqrt(gap.variance() / static_cast<double>(gap.count()))});
  }
  return out;
}

std::vector<GapReport> optimality_gap(const ExperimentConfig& cfg) {
  return gap_report(cfg, run_paired_trials(cfg));
}

}  // namespace ral
