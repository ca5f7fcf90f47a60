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

#include "qbutterfly/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qbutterfly {

Interval binomial_ci(std::size_t successes, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("binomial_ci: trials must be positive");
  if (successes > trials) {
    throw std::invalid_argument("binomial_ci: successes (" + std::to_string(successes) +
                                ") exceed trials (" + std::to_string(trials) + ")");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  return {p, 1.96 * std::sqrt(p * (1.0 - p) / n)};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(master) ^ point) ^ trial);
}

}  // namespace qbutterfly
