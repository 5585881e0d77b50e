// Copyright 2026 The Noise Eater Authors
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

#ifndef NOISE_EATER_COUNTS_H_
#define NOISE_EATER_COUNTS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "noise_eater/fringe.h"

namespace noise_eater {

/// Photon counts per phase setting, plus a shutter-closed dark measurement of
/// the same duration at every setting.
struct CountRecord {
  std::vector<double> phis;
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> dark_counts;
  double duration = 0.0;
  double rate = 0.0;
  double dark_rate = 0.0;
  std::uint64_t seed = 0;
};

/// Draws counts ~ Poisson(rate * P(phi) * duration + dark_rate * duration)
/// and dark counts ~ Poisson(dark_rate * duration). Every phase point has
/// its own seed-derived stream, so the record does not depend on the order
/// in which points are generated.
CountRecord simulate_counts(const Fringe& fringe, double rate, double duration,
                            double dark_rate, std::uint64_t seed);

struct VisibilityEstimate {
  double visibility = 0.0;
  double sigma = 0.0;
  HarmonicFit fit;
};

/// Subtracts the smallest dark count, fits A + B cos(phi) + C sin(phi) by
/// least squares and returns sqrt(B^2 + C^2) / A with a standard error
/// propagated from Poisson variances of the raw counts.
VisibilityEstimate estimate_visibility(const CountRecord& record,
                                       std::span<const std::uint64_t> dark_counts);
VisibilityEstimate estimate_visibility(const CountRecord& record);

}  // namespace noise_eater

#endif  // NOISE_EATER_COUNTS_H_
