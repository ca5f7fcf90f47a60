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

#include "qbutterfly/qsre.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <numbers>

namespace qbutterfly {

namespace {

constexpr int kMaxChunkWidth = 62;

void check_width(int chunk_width) {
  if (chunk_width < 1 || chunk_width > kMaxChunkWidth) {
    throw QsreError("chunk width D must lie in [1, " + std::to_string(kMaxChunkWidth) +
                    "], got " + std::to_string(chunk_width));
  }
}

}  // namespace

SignConvention parse_sign_convention(std::string_view name) {
  if (name == "formula") return SignConvention::Formula;
  if (name == "example") return SignConvention::Example;
  throw QsreError("unknown sign convention '" + std::string(name) + "'");
}

std::string to_string(SignConvention convention) {
  return convention == SignConvention::Formula ? "formula" : "example";
}

PrivateKey::PrivateKey(Bits bits, int chunk_width) : bits_(std::move(bits)), chunk_width_(chunk_width) {
  check_width(chunk_width);
  for (const std::uint8_t b : bits_) {
    if (b > 1) throw QsreError("key bits must be 0 or 1");
  }
}

PrivateKey PrivateKey::from_string(std::string_view bits, int chunk_width) {
  try {
    return PrivateKey(parse_bits(bits), chunk_width);
  } catch (const SimnetError& e) {
    throw QsreError(e.what());
  }
}

PrivateKey PrivateKey::random(std::size_t chunks, int chunk_width, std::mt19937_64& rng) {
  check_width(chunk_width);
  Bits bits(chunks * (static_cast<std::size_t>(chunk_width) + 2));
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto& b : bits) b = static_cast<std::uint8_t>(coin(rng));
  return PrivateKey(std::move(bits), chunk_width);
}

std::span<const std::uint8_t> PrivateKey::chunk(std::size_t i) const {
  if (i >= chunk_count()) {
    throw QsreError("key chunk " + std::to_string(i) + " is out of range (key holds " +
                    std::to_string(chunk_count()) + " chunks of " + std::to_string(chunk_size()) +
                    " bits)");
  }
  return std::span<const std::uint8_t>(bits_).subspan(i * chunk_size(), chunk_size());
}

PrivateKey load_key_file(const std::filesystem::path& path, int chunk_width) {
  std::ifstream in(path);
  if (!in) throw QsreError("cannot open key file " + path.string());
  Bits bits;
  for (std::istreambuf_iterator<char> it(in), end; it != end; ++it) {
    const char c = *it;
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') {
      throw QsreError("key file " + path.string() + " contains a character other than 0/1");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return PrivateKey(std::move(bits), chunk_width);
}

double rotation_angle(int sign_bit, std::uint64_t magnitude, SignConvention convention) {
  const double sign = (sign_bit == 0) ? 1.0 : -1.0;
  const double theta = std::numbers::pi / (sign * (1.0 + static_cast<double>(magnitude)));
  return convention == SignConvention::Formula ? theta : -theta;
}

RotationSpec make_rotation(Axis axis, int sign_bit, std::uint64_t magnitude,
                           SignConvention convention) {
  return RotationSpec{axis, sign_bit, magnitude, rotation_angle(sign_bit, magnitude, convention)};
}

RotationSpec derive_rotation(const PrivateKey& key, std::size_t chunk_index,
                             SignConvention convention) {
  const auto bits = key.chunk(chunk_index);
  std::uint64_t d = 0;
  for (std::size_t k = 2; k < bits.size(); ++k) d = (d << 1) | bits[k];
  return make_rotation(bits[0] ? Axis::Y : Axis::X, bits[1], d, convention);
}

void encode_state(StateRegistry& registry, QubitId q, const RotationSpec& spec) {
  registry.apply_gate(spec.axis == Axis::X ? Gate::rx(spec.angle) : Gate::ry(spec.angle), q);
}

void decode_state(StateRegistry& registry, QubitId q, const RotationSpec& spec) {
  registry.apply_gate(spec.axis == Axis::X ? Gate::rx(-spec.angle) : Gate::ry(-spec.angle), q);
}

RotationSpec random_guess(int chunk_width, std::mt19937_64& rng, SignConvention convention) {
  check_width(chunk_width);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<std::uint64_t> magnitude(0, (std::uint64_t{1} << chunk_width) - 1);
  const Axis axis = coin(rng) ? Axis::Y : Axis::X;
  const int sign_bit = coin(rng);
  return make_rotation(axis, sign_bit, magnitude(rng), convention);
}

}  // namespace qbutterfly
