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

#pragma once

#include <cstddef>
#include <cstdint>

namespace qbutterfly {

struct Interval {
  double estimate = 0.0;
  double half_width = 0.0;
};

/// Normal-approximation 95% interval: p +- 1.96 * sqrt(p(1-p)/n).
Interval binomial_ci(std::size_t successes, std::size_t trials);

/// Seed for trial `trial` of sweep point `point` under `master`.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t point, std::uint64_t trial);

}  // namespace qbutterfly
