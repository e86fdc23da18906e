#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "ral/asymptotics.hpp"
#include "ral/errors.hpp"
#include "ral/experiments.hpp"
#include "ral/greedy.hpp"
#include "ral/sampling.hpp"
#include "ral/stats.hpp"

using namespace ral;

namespace {

ExperimentConfig config(std::vector<std::int64_t> ns, std::int64_t trials, Objective obj,
                        DistributionKind dist = DistributionKind::Gaussian, std::uint64_t seed = 2024) {
  ExperimentConfig cfg;
  cfg.n_values = std::move(ns);
  cfg.trials = trials;
  cfg.master_seed = seed;
  cfg.objective = obj;
  cfg.dist = dist;
  return cfg;
}

}  // namespace

TEST(PairingIndex, Encoding) {
  EXPECT_EQ(pairing_index(0, 0), 0u);
  EXPECT_EQ(pairing_index(0, 7), 7u);
  EXPECT_EQ(pairing_index(1, 0), std::uint64_t{1} << 32);
  EXPECT_EQ(pairing_index(3, 5), (std::uint64_t{3} << 32) + 5);
  std::set<std::uint64_t> seen;
  for (std::size_t s = 0; s < 4; ++s)
    for (std::int64_t t = 0; t < 100; ++t) seen.insert(pairing_index(s, t));
  EXPECT_EQ(seen.size(), 400u);
}

TEST(ExperimentConfig, Validation) {
  auto cfg = config({10}, 1, Objective::GreedyMax);
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = config({}, 5, Objective::GreedyMax);
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = config({0}, 5, Objective::GreedyMax);
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = config({5001}, 5, Objective::ExactMax);
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = config({5001}, 5, Objective::GreedyMax);
  EXPECT_NO_THROW(cfg.validate());
  cfg = config({5000}, 5, Objective::ExactMin);
  EXPECT_NO_THROW(cfg.validate());
}

TEST(RunTrials, SingleEntryMatrix) {
  const auto cfg = config({1}, 5, Objective::GreedyMax);
  const auto records = run_trials(cfg);
  ASSERT_EQ(records.size(), 5u);
  for (std::int64_t t = 0; t < 5; ++t) {
    const auto& r = records[std::size_t(t)];
    EXPECT_EQ(r.n, 1);
    EXPECT_EQ(r.trial, t);
    EXPECT_EQ(r.seed.master, 2024u);
    EXPECT_EQ(r.seed.trial, pairing_index(0, t));
    EXPECT_EQ(r.value, gen_matrix(1, DistributionKind::Gaussian, r.seed)(0, 0));
  }
}

TEST(RunTrials, Deterministic) {
  auto cfg = config({3, 40, 7}, 12, Objective::GreedyMax);
  const auto a = run_trials(cfg);
  const auto b = run_trials(cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].n, b[k].n);
    EXPECT_EQ(a[k].trial, b[k].trial);
    EXPECT_EQ(a[k].value, b[k].value);
  }
}

TEST(RunTrials, IndependentOfWorkerCount) {
  for (auto obj : {Objective::GreedyMax, Objective::ExactMax, Objective::ExactMin}) {
    auto cfg = config({5, 30}, 16, obj, DistributionKind::Exponential);
    cfg.workers = 1;
    const auto one = run_trials(cfg);
    cfg.workers = 8;
    const auto eight = run_trials(cfg);
    ASSERT_EQ(one.size(), eight.size());
    for (std::size_t k = 0; k < one.size(); ++k) {
      EXPECT_EQ(one[k].n, eight[k].n);
      EXPECT_EQ(one[k].trial, eight[k].trial);
      EXPECT_EQ(one[k].value, eight[k].value);
    }
  }
}

TEST(RunTrials, SortedBySlotThenTrial) {
  auto cfg = config({9, 2, 5}, 4, Objective::GreedyMax);
  cfg.workers = 3;
  const auto records = run_trials(cfg);
  ASSERT_EQ(records.size(), 12u);
  for (std::size_t k = 0; k < records.size(); ++k) {
    EXPECT_EQ(records[k].n, cfg.n_values[k / 4]);
    EXPECT_EQ(records[k].trial, std::int64_t(k % 4));
  }
}

TEST(RunTrials, GreedyValueMatchesMarginals) {
  const auto cfg = config({25, 120}, 6, Objective::GreedyMax);
  for (const auto& r : run_trials(cfg)) {
    const auto marginals = greedy_marginals(gen_matrix(std::size_t(r.n), cfg.dist, r.seed));
    double sum = 0.0;
    for (double v : marginals) sum += v;
    EXPECT_NEAR(r.value, sum, 1e-9);
  }
}

TEST(RunTrials, ExactDominatesGreedy) {
  auto greedy_cfg = config({1, 4, 30}, 20, Objective::GreedyMax);
  auto exact_cfg = greedy_cfg;
  exact_cfg.objective = Objective::ExactMax;
  const auto g = run_trials(greedy_cfg);
  const auto e = run_trials(exact_cfg);
  for (std::size_t k = 0; k < g.size(); ++k) EXPECT_GE(e[k].value, g[k].value - 1e-9);
}

TEST(ParallelFor, RethrowsFirstFailure) {
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::size_t k) {
                              if (k == 37) throw InvalidSize("boom");
                            }),
               InvalidSize);
  std::vector<int> hit(50, 0);
  parallel_for(50, 4, [&](std::size_t k) { hit[k] += 1; });
  for (int h : hit) EXPECT_EQ(h, 1);
  EXPECT_GE(resolve_workers(0), 1u);
  EXPECT_EQ(resolve_workers(3), 3u);
}

TEST(RatioExperiment, Preconditions) {
  EXPECT_THROW(ratio_experiment(config({10}, 5, Objective::ExactMin)), DomainError);
  EXPECT_THROW(ratio_experiment(config({10}, 5, Objective::GreedyMax, DistributionKind::Uniform)), DomainError);
  EXPECT_THROW(ratio_experiment(config({1}, 5, Objective::GreedyMax)), DomainError);
}

TEST(RatioExperiment, FieldsAndPrediction) {
  const auto reports = ratio_experiment(config({200}, 200, Objective::GreedyMax));
  ASSERT_EQ(reports.size(), 1u);
  const auto& r = reports[0];
  EXPECT_EQ(r.n, 200);
  EXPECT_NEAR(r.ratio, r.mean_value / leading_order(200), 1e-12);
  const double predicted = exact_max_moment_prefix(200).back().mean;
  EXPECT_NEAR(r.predicted_ratio, predicted / leading_order(200), 1e-12);
  EXPECT_LE(std::abs(r.mean_value - predicted), 3.0 * r.std_error);
  EXPECT_GT(r.ratio, 0.0);
  EXPECT_LT(r.ratio, 1.2);
}

TEST(RatioExperiment, ExactMaxBelowFerniqueAboveGreedy) {
  for (std::int64_t n : {50, 100, 200}) {
    const auto exact = ratio_experiment(config({n}, 200, Objective::ExactMax)).front();
    const auto greedy = ratio_experiment(config({n}, 200, Objective::GreedyMax)).front();
    EXPECT_LE(exact.mean_value / fernique_upper(n), 1.0) << n;
    EXPECT_GE(exact.ratio, greedy.ratio) << n;
  }
}

TEST(CltExperiment, SingleNormalIsNormal) {
  const auto r = clt_experiment(config({1}, 10000, Objective::GreedyMax));
  EXPECT_EQ(r.predicted_A, exact_max_moments(1).mean);
  EXPECT_NEAR(r.predicted_Bsq_exact, 1.0, 1e-9);
  EXPECT_LE(r.ks_sample_standardized, 0.0195);
  EXPECT_LE(r.ks_to_phi, 0.0195);
}

TEST(CltExperiment, Preconditions) {
  EXPECT_THROW(clt_experiment(config({10}, 999, Objective::GreedyMax)), DomainError);
  EXPECT_THROW(clt_experiment(config({10, 20}, 1000, Objective::GreedyMax)), DomainError);
  EXPECT_THROW(clt_experiment(config({10}, 1000, Objective::ExactMax)), DomainError);
}

TEST(CltExperiment, ModerateN) {
  const auto r = clt_experiment(config({100}, 4000, Objective::GreedyMax));
  EXPECT_LE(r.ks_sample_standardized, 0.035);
  EXPECT_GT(r.sample_var / r.predicted_Bsq_exact, 0.9);
  EXPECT_LT(r.sample_var / r.predicted_Bsq_exact, 1.1);
}

TEST(ParisiExperiment, SmallN) {
  const auto one = parisi_experiment(config({1}, 20000, Objective::ExactMin, DistributionKind::Exponential));
  EXPECT_EQ(one[0].parisi_value, 1.0);
  EXPECT_LE(std::abs(one[0].mc_min_mean - 1.0), 3.0 * one[0].std_error);

  const auto two = parisi_experiment(config({2}, 100000, Objective::ExactMin, DistributionKind::Exponential));
  EXPECT_EQ(two[0].parisi_value, 1.25);
  EXPECT_LE(std::abs(two[0].mc_min_mean - 1.25), 3.0 * two[0].std_error);

  const auto ten = parisi_experiment(config({10}, 10000, Objective::ExactMin, DistributionKind::Exponential));
  EXPECT_NEAR(ten[0].parisi_value, 1.5497677311665406904, 1e-14);
  EXPECT_LE(std::abs(ten[0].mc_min_mean - ten[0].parisi_value), 3.0 * ten[0].std_error);
}

TEST(ParisiExperiment, Preconditions) {
  EXPECT_THROW(parisi_experiment(config({2}, 5, Objective::ExactMin)), DomainError);
  EXPECT_THROW(parisi_experiment(config({2}, 5, Objective::ExactMax, DistributionKind::Exponential)), DomainError);
}

TEST(UniformExperiment, Bounds) {
  const auto r = uniform_experiment(config({2}, 100000, Objective::ExactMin, DistributionKind::Uniform));
  EXPECT_TRUE(std::isfinite(r[0].mc_min_mean));
  EXPECT_GT(r[0].mc_min_mean, 0.0);
  EXPECT_LT(r[0].mc_min_mean, 2.0);
  EXPECT_THROW(uniform_experiment(config({1}, 5, Objective::ExactMin, DistributionKind::Uniform)), DomainError);
}

TEST(UniformExperiment, ExpansionTightensWithN) {
  const auto r = uniform_experiment(config({10, 100}, 10000, Objective::ExactMin, DistributionKind::Uniform));
  EXPECT_NEAR(r[1].steele_value, 1.6044, 5e-5);
  const double dev10 = std::abs(r[0].mc_min_mean - r[0].steele_value);
  const double dev100 = std::abs(r[1].mc_min_mean - r[1].steele_value);
  EXPECT_LE(dev100, 3.0 * r[1].std_error + 0.01);
  EXPECT_GT(dev10 / 0.01, dev100 / 0.01);
}

TEST(OptimalityGap, SingleEntryIsZero) {
  const auto reports = optimality_gap(config({1}, 20, Objective::GreedyMax));
  EXPECT_EQ(reports[0].gap, 0.0);
  EXPECT_EQ(reports[0].greedy_mean, reports[0].exact_mean);
}

TEST(OptimalityGap, PairedTrialsNonNegative) {
  const auto records = run_paired_trials(config({2, 8, 60}, 30, Objective::GreedyMax));
  ASSERT_EQ(records.size(), 90u);
  for (const auto& r : records) EXPECT_GE(r.exact, r.greedy);
  // Pairing shares the matrix with the greedy objective.
  const auto greedy = run_trials(config({2, 8, 60}, 30, Objective::GreedyMax));
  for (std::size_t k = 0; k < records.size(); ++k) EXPECT_EQ(records[k].greedy, greedy[k].value);
}

TEST(OptimalityGap, NormalizedGapShrinks) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> grid{{10, 400}, {100, 100}, {1000, 8}};
  double previous = INFINITY;
  for (auto [n, trials] : grid) {
    const auto r = optimality_gap(config({n}, trials, Objective::GreedyMax)).front();
    EXPECT_GE(r.gap, 0.0);
    const double normalized = r.gap / leading_order(n);
    EXPECT_LT(normalized + 3.0 * r.gap_std_error / leading_order(n), previous) << n;
    previous = normalized;
  }
  EXPECT_THROW(optimality_gap(config({2001}, 2, Objective::GreedyMax)), DomainError);
}
