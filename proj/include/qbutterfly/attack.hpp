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

// Malicious-entanglement attack on one transceiver pair, with and without
// rotation encoding.

#pragma once

#include <cstdint>
#include <optional>

#include "qbutterfly/iedtc.hpp"
#include "qbutterfly/qsre.hpp"
#include "qbutterfly/stats.hpp"

namespace qbutterfly {

enum class KeyPolicy {
  /// Every trial draws a fresh random key.
  kFresh,
  /// Every trial reads the same chunk of the same key.
  kReuse,
};

struct AttackConfig {
  int n_pairs = 2;
  int chunk_width = 2;  // D
  bool use_qsre = true;
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  double noise_prob = 0.0;
  int target_pair = 1;
  double threshold = 0.99;
  KeyPolicy key_policy = KeyPolicy::kFresh;
  SignConvention convention = SignConvention::Formula;
  /// Key for the target pair under kReuse; random from `seed` if unset.
  std::optional<Bits> key_bits;
};

struct AttackStats {
  std::size_t trials = 0;
  std::size_t eavesdrop_successes = 0;
  std::size_t legit_successes = 0;
  std::size_t exact_guesses = 0;
  std::size_t aborted = 0;
  Interval eavesdrop_rate;
  Interval legit_rate;
};

/// Haar-random single-qubit state.
Amplitudes<double> haar_random_state(std::mt19937_64& rng);

AttackStats run_attack(const AttackConfig& config);

}  // namespace qbutterfly
