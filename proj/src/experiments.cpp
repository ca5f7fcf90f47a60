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

#include "qbutterfly/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

namespace qbutterfly {

namespace {

bool run_accuracy_trial(const Topology& topology, const AccuracyConfig& config, double noise,
                        std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x2545f4914f6cdd1dULL);
  StateRegistry reg(noise, seed, config.noise_model);
  Network net(topology, reg);
  std::vector<Amplitudes<double>> inputs;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 0; k < config.n_pairs; ++k) {
    inputs.push_back(config.payload == PayloadDistribution::kBasis
                         ? basis_state<double>(coin(rng))
                         : haar_random_state(rng));
  }
  RoundOptions options;
  options.schedule = config.schedule;
  return run_round(net, inputs, options).all_success;
}

std::size_t count_successes(std::size_t trials, unsigned threads,
                            const std::function<bool(std::size_t)>& trial) {
  if (threads <= 1) {
    std::size_t s = 0;
    for (std::size_t t = 0; t < trials; ++t) s += trial(t) ? 1 : 0;
    return s;
  }
  std::atomic<std::size_t> successes{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      std::size_t local = 0;
      for (std::size_t t = w; t < trials; t += threads) local += trial(t) ? 1 : 0;
      successes += local;
    });
  }
  for (auto& th : pool) th.join();
  return successes.load();
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::vector<SweepRow> run_accuracy_sweep(const AccuracyConfig& config) {
  if (config.trials == 0) throw ConfigError("accuracy: trials must be at least 1");
  if (config.noise_levels.empty()) throw ConfigError("accuracy: noise range is empty");
  for (const double p : config.noise_levels) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigError("accuracy: noise levels must lie in [0, 1]");
  }
  const Topology topology = build_butterfly(config.n_pairs);
  const unsigned threads =
      config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());

  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < config.noise_levels.size(); ++i) {
    const double noise = config.noise_levels[i];
    const std::size_t s = count_successes(config.trials, threads, [&](std::size_t t) {
      return run_accuracy_trial(topology, config, noise, trial_seed(config.seed, i, t));
    });
    const Interval ci = binomial_ci(s, config.trials);
    rows.push_back({noise, ci.estimate, ci.half_width, config.trials, s});
  }
  return rows;
}

std::vector<SweepRow> run_eavesdrop_sweep(const EavesdropConfig& config) {
  if (config.trials == 0) throw ConfigError("eavesdrop: trials must be at least 1");
  if (config.total_bits.empty()) throw ConfigError("eavesdrop: bits range is empty");
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < config.total_bits.size(); ++i) {
    const int bits = config.total_bits[i];
    if (bits < 3) throw ConfigError("eavesdrop: total bits must be at least 3");
    AttackConfig attack;
    attack.n_pairs = config.n_pairs;
    attack.chunk_width = bits - 2;
    attack.use_qsre = true;
    attack.trials = config.trials;
    attack.seed = trial_seed(config.seed, i, 0);
    attack.noise_prob = config.noise_prob;
    attack.threshold = config.threshold;
    attack.convention = config.convention;
    if (config.key_bits) {
      attack.key_policy = KeyPolicy::kReuse;
      attack.key_bits = config.key_bits;
    }
    const AttackStats stats = run_attack(attack);
    rows.push_back({static_cast<double>(bits), stats.eavesdrop_rate.estimate,
                    stats.eavesdrop_rate.half_width, stats.trials, stats.eavesdrop_successes});
  }
  return rows;
}

namespace {

RoundResult instrumented_round(const Topology& topology, Schedule schedule) {
  StateRegistry reg(0.0, 1);
  Network net(topology, reg);
  std::vector<Amplitudes<double>> inputs(static_cast<std::size_t>(topology.n_pairs()),
                                         basis_state<double>(0));
  RoundOptions options;
  options.schedule = schedule;
  return run_round(net, inputs, options);
}

}  // namespace

std::vector<ResourceRow> run_resource_report(std::span<const int> sizes) {
  std::vector<ResourceRow> rows;
  for (const int n : sizes) {
    const Topology topology = build_butterfly(n);
    ResourceRow row;
    row.n_pairs = n;
    row.links = link_counts(topology);
    const RoundResult barrier = instrumented_round(topology, Schedule::kBarrier);
    const RoundResult eager = instrumented_round(topology, Schedule::kEager);
    if (!barrier.diagnostic.empty()) throw IedtcError(barrier.diagnostic);
    if (!eager.diagnostic.empty()) throw IedtcError(eager.diagnostic);
    row.peak_qubits = barrier.peak_qubits;
    row.eager_peak_qubits = eager.peak_qubits;
    row.network_peak = barrier.network_peak;
    row.iedtc_reference = reference_resources(Protocol::Iedtc, n);
    row.benchmark_reference = reference_resources(Protocol::Benchmark, n);
    row.exceeds_reference = row.links.total > row.iedtc_reference.total_links ||
                            row.links.quantum > row.iedtc_reference.quantum_links ||
                            row.peak_qubits > row.iedtc_reference.qubits;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  out << "x,estimate,ci_half_width,trials,successes\n";
  for (const SweepRow& r : rows) {
    out << format_real(r.x) << ',' << format_real(r.estimate) << ','
        << format_real(r.ci_half_width) << ',' << r.trials << ',' << r.successes << '\n';
  }
  return out.str();
}

std::string resource_csv(std::span<const ResourceRow> rows) {
  std::ostringstream out;
  out << "n,total_links,quantum_links,peak_qubits,eager_peak_qubits,network_peak,"
         "iedtc_total_links,iedtc_quantum_links,iedtc_qubits,"
         "benchmark_total_links,benchmark_quantum_links,benchmark_qubits,exceeds_reference\n";
  for (const ResourceRow& r : rows) {
    out << r.n_pairs << ',' << r.links.total << ',' << r.links.quantum << ',' << r.peak_qubits
        << ',' << r.eager_peak_qubits << ',' << r.network_peak << ','
        << r.iedtc_reference.total_links << ',' << r.iedtc_reference.quantum_links << ','
        << r.iedtc_reference.qubits << ',' << r.benchmark_reference.total_links << ','
        << r.benchmark_reference.quantum_links << ',' << r.benchmark_reference.qubits << ','
        << (r.exceeds_reference ? 1 : 0) << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string_view> split_colon(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(':', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_real(std::string_view s, std::string_view whole) {
  try {
    std::size_t used = 0;
    const std::string str(s);
    const double v = std::stod(str, &used);
    if (used != str.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("malformed range '" + std::string(whole) + "'");
  }
}

}  // namespace

std::vector<double> parse_real_range(std::string_view text) {
  const auto parts = split_colon(text);
  if (parts.size() > 3) throw ConfigError("malformed range '" + std::string(text) + "'");
  const double lo = to_real(parts[0], text);
  if (parts.size() == 1) return {lo};
  const double hi = to_real(parts[1], text);
  const double step = parts.size() == 3 ? to_real(parts[2], text) : 1.0;
  if (step <= 0.0) throw ConfigError("range step must be positive");
  if (hi < lo) throw ConfigError("range '" + std::string(text) + "' is empty");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 12 significant digits so 0.01*3 prints as 0.03.
    const double v = lo + static_cast<double>(i) * step;
    out.push_back(std::stod(format_real(std::round(v * 1e12) / 1e12)));
  }
  return out;
}

std::vector<int> parse_int_range(std::string_view text) {
  std::vector<int> out;
  for (const double v : parse_real_range(text)) {
    if (v != std::floor(v)) throw ConfigError("range '" + std::string(text) + "' must be integral");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace qbutterfly
