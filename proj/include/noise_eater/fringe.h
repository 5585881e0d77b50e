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

#ifndef NOISE_EATER_FRINGE_H_
#define NOISE_EATER_FRINGE_H_

#include <cstddef>
#include <span>
#include <vector>

namespace noise_eater {

/// Phase samples from `start` to `stop` inclusive, in radians.
struct PhaseGrid {
  double start = 0.0;
  double stop = 6.283185307179586;
  std::size_t points = 361;

  std::vector<double> values() const;

  /// start:stop:step in degrees, stop included when it lies on the grid.
  static PhaseGrid from_degrees(double start_deg, double stop_deg, double step_deg);
};

/// Least-squares fit of offset + cos_coeff cos(phi) + sin_coeff sin(phi).
struct HarmonicFit {
  double offset = 0.0;
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
  double max_residual = 0.0;

  double amplitude() const;
  /// |modulation| / offset; zero when the offset is not positive.
  double visibility() const;
  double operator()(double phi) const;
};

HarmonicFit fit_harmonic(std::span<const double> phis, std::span<const double> values);

/// (max - min) / (max + min) over the samples; zero for an all-zero fringe.
double visibility(std::span<const double> values);

/// Sampled detection probability versus phase.
struct Fringe {
  std::vector<double> phis;
  std::vector<double> probabilities;
  HarmonicFit fit;
  double p_max = 0.0;
  double p_min = 0.0;
  double visibility = 0.0;

  static Fringe from_samples(std::vector<double> phis, std::vector<double> probabilities);

  /// p / (p_max + p_min) for every sample.
  std::vector<double> normalized() const;
};

/// Trigonometric polynomial c0 + sum_k a_k cos(k phi) + b_k sin(k phi).
class TrigPolynomial {
 public:
  TrigPolynomial() = default;

  /// Exact interpolation from values at phi_j = 2 pi j / (2 degree + 1).
  static TrigPolynomial interpolate(std::span<const double> samples);
  static std::vector<double> interpolation_nodes(int degree);

  int degree() const { return static_cast<int>(cos_.size()); }
  double operator()(double phi) const;

 private:
  double constant_ = 0.0;
  std::vector<double> cos_;
  std::vector<double> sin_;
};

}  // namespace noise_eater

#endif  // NOISE_EATER_FRINGE_H_
