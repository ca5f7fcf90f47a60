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

// qbutterfly: accuracy, eavesdrop and resource experiments on the butterfly
// classical-quantum network.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbutterfly/experiments.hpp"

#ifndef QBUTTERFLY_VERSION
#define QBUTTERFLY_VERSION "0.0.0"
#endif

namespace {

using namespace qbutterfly;
using nlohmann::json;

struct CommonOptions {
  std::uint64_t seed = 42;
  std::string out;
  std::string manifest;
  bool dump_topology = false;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path);
  f << content;
}

void write_manifest(const CommonOptions& common, const std::string& command, json config,
                    std::size_t rows, double seconds) {
  if (common.manifest.empty()) return;
  json m;
  m["tool"] = "qbutterfly";
  m["version"] = QBUTTERFLY_VERSION;
  m["command"] = command;
  m["config"] = std::move(config);
  m["seed"] = common.seed;
  m["output"] = common.out.empty() ? "-" : common.out;
  m["rows"] = rows;
  m["elapsed_seconds"] = seconds;
  std::ofstream f(common.manifest);
  if (!f) throw ConfigError("cannot write " + common.manifest);
  f << m.dump(2) << '\n';
}

void maybe_dump(const CommonOptions& common, int n) {
  if (common.dump_topology) std::cout << build_butterfly(n).describe();
}

void add_common(CLI::App* app, CommonOptions& common) {
  app->add_option("--seed", common.seed, "Master seed");
  app->add_option("--out", common.out, "Output CSV path (stdout if omitted)");
  app->add_option("--json-manifest", common.manifest, "Write a JSON run manifest to this path");
  app->add_flag("--dump-topology", common.dump_topology, "Print the network topology first");
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Butterfly classical-quantum network simulator"};
  app.set_version_flag("--version", QBUTTERFLY_VERSION);
  app.require_subcommand(1);

  CommonOptions common;

  // accuracy
  auto* accuracy = app.add_subcommand("accuracy", "Accuracy under gate noise");
  int acc_n = 2;
  std::string acc_noise = "0.01:0.10:0.01";
  std::size_t acc_trials = 1000;
  std::string noise_model = "per-gate";
  std::string payload = "basis";
  std::string schedule = "barrier";
  unsigned threads = 0;
  accuracy->add_option("--n", acc_n, "Number of transceiver pairs")->check(CLI::Range(2, 1000));
  accuracy->add_option("--noise", acc_noise, "Noise range a[:b[:step]]");
  accuracy->add_option("--trials", acc_trials, "Trials per noise level")->check(CLI::PositiveNumber);
  accuracy->add_option("--noise-model", noise_model, "Gate noise channel")
      ->check(CLI::IsMember({"per-gate", "per-target"}));
  accuracy->add_option("--payload", payload, "Payload state distribution")
      ->check(CLI::IsMember({"basis", "haar"}));
  accuracy->add_option("--schedule", schedule, "Distribution schedule")
      ->check(CLI::IsMember({"barrier", "eager"}));
  accuracy->add_option("--threads", threads, "Worker threads (0 = all cores)");
  add_common(accuracy, common);

  // eavesdrop
  auto* eavesdrop = app.add_subcommand("eavesdrop", "Eavesdropper success against rotation encoding");
  std::string eve_bits = "3:8";
  std::size_t eve_trials = 500;
  int eve_n = 2;
  double eve_noise = 0.0;
  double threshold = 0.99;
  std::string key_file;
  std::string sign = "formula";
  eavesdrop->add_option("--bits", eve_bits, "Total key bits per message, range a[:b[:step]]");
  eavesdrop->add_option("--trials", eve_trials, "Trials per bit count")->check(CLI::PositiveNumber);
  eavesdrop->add_option("--n", eve_n, "Number of transceiver pairs")->check(CLI::Range(2, 1000));
  eavesdrop->add_option("--noise", eve_noise, "Gate noise probability")->check(CLI::Range(0.0, 1.0));
  eavesdrop->add_option("--threshold", threshold, "Fidelity counted as a successful eavesdrop");
  eavesdrop->add_option("--key-file", key_file, "Pre-shared key (0/1 characters), reused every trial")
      ->check(CLI::ExistingFile);
  eavesdrop->add_option("--sign-convention", sign, "Sign bit convention")
      ->check(CLI::IsMember({"formula", "example"}));
  add_common(eavesdrop, common);

  // resources
  auto* resources = app.add_subcommand("resources", "Link and qubit counts against the reference rows");
  std::string res_n = "2:10";
  resources->add_option("--n", res_n, "Network sizes, range a[:b[:step]]");
  add_common(resources, common);

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    if (accuracy->parsed()) {
      maybe_dump(common, acc_n);
      AccuracyConfig cfg;
      cfg.n_pairs = acc_n;
      cfg.noise_levels = parse_real_range(acc_noise);
      cfg.trials = acc_trials;
      cfg.seed = common.seed;
      cfg.noise_model = noise_model == "per-gate" ? NoiseModel::kPerGate : NoiseModel::kPerTarget;
      cfg.payload = payload == "basis" ? PayloadDistribution::kBasis : PayloadDistribution::kHaar;
      cfg.schedule = schedule == "barrier" ? Schedule::kBarrier : Schedule::kEager;
      cfg.threads = threads;
      const auto rows = run_accuracy_sweep(cfg);
      write_output(common.out, sweep_csv(rows));
      write_manifest(common, "accuracy",
                     {{"n", acc_n}, {"noise", acc_noise}, {"trials", acc_trials},
                      {"noise_model", noise_model}, {"payload", payload}, {"schedule", schedule}},
                     rows.size(), elapsed(start));
    } else if (eavesdrop->parsed()) {
      maybe_dump(common, eve_n);
      EavesdropConfig cfg;
      cfg.total_bits = parse_int_range(eve_bits);
      cfg.trials = eve_trials;
      cfg.seed = common.seed;
      cfg.n_pairs = eve_n;
      cfg.noise_prob = eve_noise;
      cfg.threshold = threshold;
      cfg.convention = parse_sign_convention(sign);
      if (!key_file.empty()) cfg.key_bits = load_key_file(key_file, 1).bits();
      const auto rows = run_eavesdrop_sweep(cfg);
      write_output(common.out, sweep_csv(rows));
      write_manifest(common, "eavesdrop",
                     {{"bits", eve_bits}, {"trials", eve_trials}, {"n", eve_n},
                      {"noise", eve_noise}, {"threshold", threshold}, {"sign_convention", sign},
                      {"key_file", key_file}},
                     rows.size(), elapsed(start));
    } else if (resources->parsed()) {
      const auto sizes = parse_int_range(res_n);
      for (const int n : sizes) {
        if (n < 2) throw ConfigError("resources: every N must be at least 2");
      }
      maybe_dump(common, sizes.front());
      const auto rows = run_resource_report(sizes);
      write_output(common.out, resource_csv(rows));
      write_manifest(common, "resources", {{"n", res_n}}, rows.size(), elapsed(start));
    }
  } catch (const std::exception& e) {
    std::cerr << "qbutterfly: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
