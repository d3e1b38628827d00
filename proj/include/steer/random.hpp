// Copyright 2026 The steerlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "steer/correlation.hpp"

namespace steer {

/// Uniform double in [0, 1) built from the top 53 bits of one engine word, so
/// the stream depends only on the (standardised) engine sequence.
inline double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& engine, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(engine);
}

/// Correlators drawn uniformly from [-1, 1]^4.
inline CorrelationSet<double> uniform_correlation_set(std::mt19937_64& engine) {
  Eigen::Vector4d v;
  for (int i = 0; i < 4; ++i) v(i) = uniform_in(engine, -1, 1);
  return CorrelationSet<double>(v);
}

}  // namespace steer
