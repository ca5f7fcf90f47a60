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


#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <tuple>

#include <gtest/gtest.h>

#include "dense_oracle.hpp"
#include "qbutterfly/attack.hpp"
#include "qbutterfly/qsre.hpp"

namespace qbutterfly {
namespace {

using State = Amplitudes<double>;
constexpr double kPi = std::numbers::pi;

State to_state(const oracle::Vec& v) { return State(v(0), v(1)); }

oracle::Mat oracle_rotation(const RotationSpec& spec, double angle) {
  return oracle::rotation(spec.axis == Axis::X ? oracle::X() : oracle::Y(), angle);
}

TEST(PrivateKeyTest, ChunksAreContiguous) {
  const PrivateKey key = PrivateKey::from_string("101100011110", 2);
  EXPECT_EQ(key.chunk_count(), 3u);
  const auto c1 = key.chunk(1);
  EXPECT_EQ(to_string(Bits(c1.begin(), c1.end())), "0001");
  EXPECT_THROW(key.chunk(3), QsreError);
  EXPECT_THROW(PrivateKey::from_string("10a1", 2), QsreError);
  EXPECT_THROW(PrivateKey::from_string("1011", 0), QsreError);
}

TEST(DeriveRotationTest, Examples) {
  const RotationSpec y3 = derive_rotation(PrivateKey::from_string("1011", 2), 0);
  EXPECT_EQ(y3.axis, Axis::Y);
  EXPECT_EQ(y3.sign_bit, 0);
  EXPECT_EQ(y3.magnitude, 3u);
  EXPECT_NEAR(y3.angle, kPi / 4, 1e-15);

  const RotationSpec zero = derive_rotation(PrivateKey::from_string("0000", 2), 0);
  EXPECT_EQ(zero.axis, Axis::X);
  EXPECT_EQ(zero.sign_bit, 0);
  EXPECT_EQ(zero.magnitude, 0u);
  EXPECT_NEAR(std::abs(zero.angle), kPi, 1e-15);

  const RotationSpec neg = derive_rotation(PrivateKey::from_string("0100", 2), 0);
  EXPECT_EQ(neg.axis, Axis::X);
  EXPECT_EQ(neg.sign_bit, 1);
  EXPECT_NEAR(neg.angle, -kPi, 1e-15);
}

TEST(DeriveRotationTest, MagnitudeIsMostSignificantBitFirst) {
  const RotationSpec s = derive_rotation(PrivateKey::from_string("00100", 3), 0);
  EXPECT_EQ(s.magnitude, 4u);
}

TEST(DeriveRotationTest, OutOfRangeChunk) {
  EXPECT_THROW(derive_rotation(PrivateKey::from_string("1011", 2), 1), QsreError);
}

TEST(RotationAngleTest, Examples) {
  EXPECT_NEAR(rotation_angle(0, 0), kPi, 1e-15);
  EXPECT_NEAR(rotation_angle(0, 3), kPi / 4, 1e-15);
  EXPECT_NEAR(rotation_angle(1, 3), -kPi / 4, 1e-15);
}

TEST(RotationAngleTest, ExampleConventionNegates) {
  for (int b = 0; b < 2; ++b) {
    for (std::uint64_t d = 0; d < 8; ++d) {
      EXPECT_EQ(rotation_angle(b, d, SignConvention::Example), -rotation_angle(b, d));
      const double theta = rotation_angle(b, d);
      EXPECT_LE(std::abs(theta), kPi);
      EXPECT_NE(theta, 0.0);
    }
  }
  EXPECT_EQ(parse_sign_convention("example"), SignConvention::Example);
  EXPECT_THROW(parse_sign_convention("other"), QsreError);
}

TEST(EncodeTest, MatrixOracleExamples) {
  auto reg = new_registry(0.0, 1);
  const QubitId a = reg.alloc_qubit(basis_state<double>(0));
  encode_state(reg, a, make_rotation(Axis::X, 0, 0));
  EXPECT_NEAR(reg.fidelity(a, basis_state<double>(1)), 1.0, 1e-12);

  const QubitId b = reg.alloc_qubit(basis_state<double>(0));
  encode_state(reg, b, make_rotation(Axis::Y, 0, 1));
  EXPECT_NEAR(reg.fidelity(b, basis_state<double>(0)), 0.5, 1e-12);
}

TEST(EncodeTest, MatchesDenseOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const RotationSpec spec = random_guess(4, rng);
    const oracle::Vec in = oracle::haar(rng);
    auto reg = new_registry(0.0, 1);
    const QubitId q = reg.alloc_qubit(to_state(in));
    encode_state(reg, q, spec);
    const oracle::Vec expected = oracle_rotation(spec, spec.angle) * in;
    EXPECT_NEAR(reg.fidelity(q, to_state(expected)), 1.0, 1e-9);
  }
}

TEST(DecodeTest, InvertsEveryEncodingExhaustively) {
  std::mt19937_64 rng(4);
  for (int width = 1; width <= 3; ++width) {
    for (int axis = 0; axis < 2; ++axis) {
      for (int b = 0; b < 2; ++b) {
        for (std::uint64_t d = 0; d < (1u << width); ++d) {
          const RotationSpec spec = make_rotation(axis ? Axis::Y : Axis::X, b, d);
          const State in = to_state(oracle::haar(rng));
          auto reg = new_registry(0.0, 1);
          const QubitId q = reg.alloc_qubit(in);
          encode_state(reg, q, spec);
          decode_state(reg, q, spec);
          EXPECT_NEAR(reg.fidelity(q, in), 1.0, 1e-9);
        }
      }
    }
  }
}

TEST(DecodeTest, WrongAxisFails) {
  auto reg = new_registry(0.0, 1);
  const QubitId q = reg.alloc_qubit(basis_state<double>(0));
  encode_state(reg, q, make_rotation(Axis::X, 0, 1));
  decode_state(reg, q, make_rotation(Axis::Y, 0, 1));
  const double f = reg.fidelity(q, basis_state<double>(0));
  // Oracle: RY(-pi/2) RX(pi/2) |0>
  const oracle::Vec expected = oracle::rotation(oracle::Y(), -kPi / 2) *
                               oracle::rotation(oracle::X(), kPi / 2) * oracle::ket(1, 0);
  EXPECT_NEAR(f, std::norm(expected(0)), 1e-12);
  EXPECT_LT(f, 1.0 - 1e-3);
}

TEST(DecodeTest, WrongSignAtHalfTurnIsIndistinguishable) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const State in = to_state(oracle::haar(rng));
    auto reg = new_registry(0.0, 1);
    const QubitId q = reg.alloc_qubit(in);
    encode_state(reg, q, make_rotation(Axis::X, 0, 0));
    decode_state(reg, q, make_rotation(Axis::X, 1, 0));
    EXPECT_NEAR(reg.fidelity(q, in), 1.0, 1e-9);
  }
}

TEST(DecodeTest, DeadQubit) {
  auto reg = new_registry(0.0, 1);
  const QubitId q = reg.alloc_qubit(basis_state<double>(0));
  reg.release(q);
  EXPECT_THROW(decode_state(reg, q, make_rotation(Axis::X, 0, 0)), QStateError);
}

TEST(RandomGuessTest, UniformOverAllSpecs) {
  std::mt19937_64 rng(10);
  constexpr int kWidth = 2;
  constexpr int kSamples = 32000;
  std::map<std::tuple<int, int, std::uint64_t>, int> counts;
  for (int i = 0; i < kSamples; ++i) {
    const RotationSpec s = random_guess(kWidth, rng);
    ++counts[{static_cast<int>(s.axis), s.sign_bit, s.magnitude}];
  }
  ASSERT_EQ(counts.size(), 16u);
  const double p = 1.0 / 16;
  for (const auto& [key, c] : counts) {
    EXPECT_NEAR(static_cast<double>(c) / kSamples, p, 5 * std::sqrt(p * (1 - p) / kSamples));
  }
}

TEST(RandomGuessTest, ExactMatchRate) {
  std::mt19937_64 rng(11);
  for (const int width : {1, 2, 6}) {
    constexpr int kSamples = 20000;
    int hits = 0;
    for (int i = 0; i < kSamples; ++i) {
      const RotationSpec truth = derive_rotation(PrivateKey::random(1, width, rng), 0);
      hits += random_guess(width, rng).same_encoding(truth) ? 1 : 0;
    }
    const double p = std::ldexp(1.0, -(width + 2));
    EXPECT_NEAR(static_cast<double>(hits) / kSamples, p, 5 * std::sqrt(p * (1 - p) / kSamples))
        << "D=" << width;
  }
}

TEST(KeyFileTest, LoadsBitsIgnoringWhitespace) {
  const auto path = std::filesystem::temp_directory_path() / "qbutterfly_key_test.txt";
  {
    std::ofstream out(path);
    out << "1011\n 0001\n";
  }
  const PrivateKey key = load_key_file(path, 2);
  EXPECT_EQ(key.chunk_count(), 2u);
  EXPECT_EQ(derive_rotation(key, 0).magnitude, 3u);
  {
    std::ofstream out(path);
    out << "10x1\n";
  }
  EXPECT_THROW(load_key_file(path, 2), QsreError);
  std::filesystem::remove(path);
  EXPECT_THROW(load_key_file(path, 2), QsreError);
}

TEST(AttackTest, WithoutEncodingEavesdropperAlwaysWins) {
  AttackConfig config;
  config.use_qsre = false;
  config.trials = 200;
  const AttackStats s = run_attack(config);
  EXPECT_EQ(s.aborted, 0u);
  EXPECT_EQ(s.eavesdrop_successes, 200u);
  EXPECT_LE(s.legit_successes, 2u);
}

TEST(AttackTest, EavesdropperSucceedsAtLeastOnExactGuesses) {
  AttackConfig config;
  config.trials = 400;
  config.chunk_width = 2;
  const AttackStats s = run_attack(config);
  EXPECT_EQ(s.aborted, 0u);
  EXPECT_GE(s.eavesdrop_successes, s.exact_guesses);
  EXPECT_LT(s.eavesdrop_rate.estimate, 0.5);
}

// A reused chunk must not change the eavesdropper's success rate compared
// with fresh keys, as long as the eavesdropper never learns the key.
TEST(AttackTest, KeyReuseDoesNotHelpBlindGuessing) {
  AttackConfig fresh;
  fresh.trials = 1000;
  fresh.seed = 5;
  AttackConfig reuse = fresh;
  reuse.key_policy = KeyPolicy::kReuse;
  reuse.key_bits = parse_bits("1011");
  const AttackStats a = run_attack(fresh);
  const AttackStats b = run_attack(reuse);
  const double gap = std::abs(a.eavesdrop_rate.estimate - b.eavesdrop_rate.estimate);
  EXPECT_LE(gap, a.eavesdrop_rate.half_width + b.eavesdrop_rate.half_width);
}

TEST(AttackTest, ConfigErrors) {
  AttackConfig config;
  config.trials = 0;
  EXPECT_THROW(run_attack(config), QsreError);
  config.trials = 1;
  config.target_pair = 3;
  EXPECT_THROW(run_attack(config), QsreError);
  config.target_pair = 1;
  config.key_policy = KeyPolicy::kReuse;
  config.key_bits = parse_bits("10");
  EXPECT_THROW(run_attack(config), QsreError);
}

}  // namespace
}  // namespace qbutterfly
