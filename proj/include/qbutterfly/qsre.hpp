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

// Rotation encoding of a payload qubit from a pre-shared key. Each message
// reads a chunk of 2 + D key bits: axis bit (0 -> X, 1 -> Y), sign bit b,
// then D magnitude bits d (most significant first), and rotates by
//   theta = pi / ((-1)^b * (1 + d)).

#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qbutterfly/qstate.hpp"
#include "qbutterfly/simnet.hpp"

namespace qbutterfly {

class QsreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axis { X, Y };

enum class SignConvention {
  /// b = 1 gives a negative angle.
  Formula,
  /// b = 0 gives a negative angle.
  Example,
};

SignConvention parse_sign_convention(std::string_view name);
std::string to_string(SignConvention convention);

class PrivateKey {
 public:
  PrivateKey(Bits bits, int chunk_width);

  static PrivateKey from_string(std::string_view bits, int chunk_width);

  /// Uniformly random key holding `chunks` chunks.
  static PrivateKey random(std::size_t chunks, int chunk_width, std::mt19937_64& rng);

  const Bits& bits() const { return bits_; }
  int chunk_width() const { return chunk_width_; }
  std::size_t chunk_size() const { return static_cast<std::size_t>(chunk_width_) + 2; }
  std::size_t chunk_count() const { return bits_.size() / chunk_size(); }

  /// Bits [i*(2+D), (i+1)*(2+D)). Throws past the end of the key.
  std::span<const std::uint8_t> chunk(std::size_t i) const;

 private:
  Bits bits_;
  int chunk_width_;
};

/// Reads a key file: '0'/'1' characters, whitespace ignored.
PrivateKey load_key_file(const std::filesystem::path& path, int chunk_width);

struct RotationSpec {
  Axis axis = Axis::X;
  int sign_bit = 0;
  std::uint64_t magnitude = 0;
  double angle = 0.0;

  /// Same axis, sign and magnitude.
  bool same_encoding(const RotationSpec& other) const {
    return axis == other.axis && sign_bit == other.sign_bit && magnitude == other.magnitude;
  }
  bool operator==(const RotationSpec&) const = default;
};

double rotation_angle(int sign_bit, std::uint64_t magnitude,
                      SignConvention convention = SignConvention::Formula);

RotationSpec make_rotation(Axis axis, int sign_bit, std::uint64_t magnitude,
                           SignConvention convention = SignConvention::Formula);

RotationSpec derive_rotation(const PrivateKey& key, std::size_t chunk_index,
                             SignConvention convention = SignConvention::Formula);

/// Rotates q by the spec (RX or RY; subject to gate noise).
void encode_state(StateRegistry& registry, QubitId q, const RotationSpec& spec);

/// Applies the inverse rotation: same axis, angle negated.
void decode_state(StateRegistry& registry, QubitId q, const RotationSpec& spec);

/// Uniform over the 2 * 2 * 2^D distinct specs.
RotationSpec random_guess(int chunk_width, std::mt19937_64& rng,
                          SignConvention convention = SignConvention::Formula);

}  // namespace qbutterfly
