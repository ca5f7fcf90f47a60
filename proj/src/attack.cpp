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

#include "qbutterfly/attack.hpp"

#include <cmath>
#include <random>

namespace qbutterfly {

Amplitudes<double> haar_random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Amplitudes<double> v;
  do {
    v << Complex<double>(gauss(rng), gauss(rng)), Complex<double>(gauss(rng), gauss(rng));
  } while (v.norm() < 1e-12);
  return v.normalized();
}

AttackStats run_attack(const AttackConfig& config) {
  if (config.trials == 0) throw QsreError("run_attack: trials must be positive");
  if (config.n_pairs < 2) throw QsreError("run_attack: N must be at least 2");
  if (config.target_pair < 1 || config.target_pair > config.n_pairs) {
    throw QsreError("run_attack: target pair out of range");
  }
  const Topology topology = build_butterfly(config.n_pairs);
  const auto n = static_cast<std::size_t>(config.n_pairs);
  const auto target = static_cast<std::size_t>(config.target_pair - 1);

  std::optional<PrivateKey> reused;
  if (config.key_policy == KeyPolicy::kReuse) {
    if (config.key_bits) {
      reused = PrivateKey(*config.key_bits, config.chunk_width);
    } else {
      std::mt19937_64 key_rng(trial_seed(config.seed, 0xFFFF, 0));
      reused = PrivateKey::random(1, config.chunk_width, key_rng);
    }
    reused->chunk(0);  // throws if the key is shorter than one chunk
  }

  AttackStats stats;
  stats.trials = config.trials;
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    const std::uint64_t seed = trial_seed(config.seed, 0, trial);
    std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
    StateRegistry reg(config.noise_prob, seed);
    Network net(topology, reg);

    std::vector<Amplitudes<double>> inputs;
    for (std::size_t k = 0; k < n; ++k) inputs.push_back(haar_random_state(rng));

    RoundOptions options;
    AttackSetup attack;
    attack.target_pair = config.target_pair;
    attack.threshold = config.threshold;
    if (config.use_qsre) {
      QsreSetup qsre;
      qsre.convention = config.convention;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == target && reused) {
          qsre.keys.push_back(*reused);
        } else {
          qsre.keys.push_back(PrivateKey::random(1, config.chunk_width, rng));
        }
      }
      const RotationSpec guess = random_guess(config.chunk_width, rng, config.convention);
      const RotationSpec truth = derive_rotation(qsre.keys[target], 0, config.convention);
      if (guess.same_encoding(truth)) ++stats.exact_guesses;
      attack.guess = guess;
      options.qsre = std::move(qsre);
    }
    options.attack = attack;

    const RoundResult result = run_round(net, inputs, options);
    if (!result.diagnostic.empty()) {
      ++stats.aborted;
      continue;
    }
    if (result.eavesdrop && result.eavesdrop->success) ++stats.eavesdrop_successes;
    if (result.pairs.at(target).success) ++stats.legit_successes;
  }
  stats.eavesdrop_rate = binomial_ci(stats.eavesdrop_successes, stats.trials);
  stats.legit_rate = binomial_ci(stats.legit_successes, stats.trials);
  return stats;
}

}  // namespace qbutterfly
