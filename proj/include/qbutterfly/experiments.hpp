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

// Sweeps behind the accuracy, eavesdropping and resource tables.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qbutterfly/attack.hpp"
#include "qbutterfly/iedtc.hpp"
#include "qbutterfly/stats.hpp"
#include "qbutterfly/topology.hpp"

namespace qbutterfly {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepRow {
  double x = 0.0;
  double estimate = 0.0;
  double ci_half_width = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;
};

enum class PayloadDistribution {
  /// |0> or |1> with equal probability.
  kBasis,
  kHaar,
};

struct AccuracyConfig {
  int n_pairs = 2;
  std::vector<double> noise_levels;
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  NoiseModel noise_model = NoiseModel::kPerGate;
  PayloadDistribution payload = PayloadDistribution::kBasis;
  Schedule schedule = Schedule::kBarrier;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One row per noise level; a trial succeeds iff every pair is delivered exactly.
std::vector<SweepRow> run_accuracy_sweep(const AccuracyConfig& config);

struct EavesdropConfig {
  std::vector<int> total_bits;  // 2 + D per row
  std::size_t trials = 500;
  std::uint64_t seed = 42;
  int n_pairs = 2;
  double noise_prob = 0.0;
  double threshold = 0.99;
  SignConvention convention = SignConvention::Formula;
  /// Reused key for the attacked pair (e.g. from a key file).
  std::optional<Bits> key_bits;
};

/// One row per total bit count, running the attack with encoding enabled.
std::vector<SweepRow> run_eavesdrop_sweep(const EavesdropConfig& config);

struct ResourceRow {
  int n_pairs = 0;
  LinkCounts links;
  std::size_t peak_qubits = 0;  // barrier schedule
  std::size_t eager_peak_qubits = 0;
  std::size_t network_peak = 0;
  ResourceTriple iedtc_reference;
  ResourceTriple benchmark_reference;
  bool exceeds_reference = false;
};

std::vector<ResourceRow> run_resource_report(std::span<const int> sizes);

std::string sweep_csv(std::span<const SweepRow> rows);
std::string resource_csv(std::span<const ResourceRow> rows);

/// "a", "a:b" (step 1) or "a:b:step"; inclusive of b within rounding.
std::vector<double> parse_real_range(std::string_view text);
std::vector<int> parse_int_range(std::string_view text);

}  // namespace qbutterfly
