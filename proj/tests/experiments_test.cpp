// Copyright 2026 The qbutterfly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qbutterfly/experiments.hpp"

namespace qbutterfly {
namespace {

TEST(BinomialCiTest, Examples) {
  const Interval a = binomial_ci(925, 1000);
  EXPECT_DOUBLE_EQ(a.estimate, 0.925);
  EXPECT_NEAR(a.half_width, 0.0163, 5e-5);
  const Interval b = binomial_ci(447, 1000);
  EXPECT_NEAR(b.half_width, 0.0308, 5e-5);
  const Interval c = binomial_ci(0, 100);
  EXPECT_EQ(c.estimate, 0.0);
  EXPECT_EQ(c.half_width, 0.0);
  EXPECT_THROW(binomial_ci(0, 0), std::invalid_argument);
  EXPECT_THROW(binomial_ci(5, 4), std::invalid_argument);
}

// Percentile bootstrap of the sample mean; its 95% half-width should agree
// with the normal approximation for moderately large samples.
TEST(BinomialCiTest, AgreesWithBootstrap) {
  std::mt19937_64 rng(1);
  for (const std::size_t successes : {72u, 250u, 460u}) {
    constexpr std::size_t kTrials = 500;
    std::vector<int> data(kTrials, 0);
    std::fill_n(data.begin(), successes, 1);
    std::vector<double> means;
    std::uniform_int_distribution<std::size_t> pick(0, kTrials - 1);
    for (int b = 0; b < 4000; ++b) {
      std::size_t s = 0;
      for (std::size_t i = 0; i < kTrials; ++i) s += static_cast<std::size_t>(data[pick(rng)]);
      means.push_back(static_cast<double>(s) / kTrials);
    }
    std::sort(means.begin(), means.end());
    const double lo = means[static_cast<std::size_t>(0.025 * means.size())];
    const double hi = means[static_cast<std::size_t>(0.975 * means.size())];
    EXPECT_NEAR((hi - lo) / 2, binomial_ci(successes, kTrials).half_width, 0.01);
  }
}

TEST(TrialSeedTest, DistinctAndStable) {
  EXPECT_EQ(trial_seed(42, 1, 2), trial_seed(42, 1, 2));
  EXPECT_NE(trial_seed(42, 1, 2), trial_seed(42, 2, 1));
  EXPECT_NE(trial_seed(42, 0, 0), trial_seed(43, 0, 0));
}

TEST(RangeTest, RealRanges) {
  EXPECT_EQ(parse_real_range("0.5"), std::vector<double>{0.5});
  const auto r = parse_real_range("0.01:0.10:0.01");
  ASSERT_EQ(r.size(), 10u);
  EXPECT_EQ(r[2], 0.03);
  EXPECT_EQ(r.back(), 0.1);
  EXPECT_THROW(parse_real_range("0.1:0.01:0.01"), ConfigError);
  EXPECT_THROW(parse_real_range("0:1:0"), ConfigError);
  EXPECT_THROW(parse_real_range("abc"), ConfigError);
  EXPECT_THROW(parse_real_range("1:2:3:4"), ConfigError);
}

TEST(RangeTest, IntRanges) {
  EXPECT_EQ(parse_int_range("3:8"), (std::vector<int>{3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(parse_int_range("2:10:4"), (std::vector<int>{2, 6, 10}));
  EXPECT_THROW(parse_int_range("2.5"), ConfigError);
}

TEST(AccuracySweepTest, NoiselessIsExact) {
  AccuracyConfig cfg;
  cfg.noise_levels = {0.0};
  cfg.trials = 100;
  const auto rows = run_accuracy_sweep(cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].estimate, 1.0);
  EXPECT_EQ(rows[0].successes, 100u);
}

TEST(AccuracySweepTest, DeterministicAcrossThreadCounts) {
  AccuracyConfig cfg;
  cfg.noise_levels = {0.02, 0.05, 0.08};
  cfg.trials = 200;
  cfg.threads = 1;
  const std::string a = sweep_csv(run_accuracy_sweep(cfg));
  cfg.threads = 4;
  const std::string b = sweep_csv(run_accuracy_sweep(cfg));
  EXPECT_EQ(a, b);
  const auto rows = run_accuracy_sweep(cfg);
  EXPECT_EQ(rows.size(), 3u);
  for (const SweepRow& r : rows) {
    EXPECT_GE(r.estimate, 0.0);
    EXPECT_LE(r.estimate, 1.0);
    EXPECT_GE(r.ci_half_width, 0.0);
  }
}

TEST(AccuracySweepTest, ConfigErrors) {
  AccuracyConfig cfg;
  cfg.noise_levels = {0.1};
  cfg.trials = 0;
  EXPECT_THROW(run_accuracy_sweep(cfg), ConfigError);
  cfg.trials = 10;
  cfg.noise_levels = {};
  EXPECT_THROW(run_accuracy_sweep(cfg), ConfigError);
  cfg.noise_levels = {1.5};
  EXPECT_THROW(run_accuracy_sweep(cfg), ConfigError);
}

TEST(EavesdropSweepTest, RowsAndErrors) {
  EavesdropConfig cfg;
  cfg.total_bits = {3, 4};
  cfg.trials = 50;
  const auto rows = run_eavesdrop_sweep(cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].x, 3.0);
  EXPECT_EQ(sweep_csv(rows), sweep_csv(run_eavesdrop_sweep(cfg)));
  cfg.total_bits = {2};
  EXPECT_THROW(run_eavesdrop_sweep(cfg), ConfigError);
}

TEST(ResourceReportTest, MatchesReferenceRows) {
  const std::vector<int> sizes{2, 3, 10};
  const auto rows = run_resource_report(sizes);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].links, (LinkCounts{7, 4}));
  EXPECT_EQ(rows[0].peak_qubits, 14u);
  EXPECT_EQ(rows[1].peak_qubits, 21u);
  EXPECT_EQ(rows[1].benchmark_reference, (ResourceTriple{44, 35, 28}));
  EXPECT_EQ(rows[2].links, (LinkCounts{111, 100}));
  EXPECT_LE(rows[2].peak_qubits, 70u);
  for (const ResourceRow& r : rows) EXPECT_FALSE(r.exceeds_reference);
  const std::string csv = resource_csv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(SweepCsvTest, Format) {
  const std::vector<SweepRow> rows{{0.01, 0.925, 0.0163249, 1000, 925}};
  EXPECT_EQ(sweep_csv(rows),
            "x,estimate,ci_half_width,trials,successes\n0.01,0.925,0.0163249,1000,925\n");
}

}  // namespace
}  // namespace qbutterfly
