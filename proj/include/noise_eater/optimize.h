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

#ifndef NOISE_EATER_OPTIMIZE_H_
#define NOISE_EATER_OPTIMIZE_H_

#include <functional>
#include <span>
#include <vector>

#include "noise_eater/experiment.h"

namespace noise_eater {

inline constexpr int kGridPointsPerAxis = 41;
inline constexpr double kGoldenTolerance = 1e-6;

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
/// Returns the abscissa; the bracket is shrunk until it is narrower than tol.
double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol = kGoldenTolerance);

struct TapOptimum {
  double t_r = 0.0;
  double visibility = 0.0;
};

/// Best tap transmissivity for the conditional fringe with every other dial
/// (eta_a included) held fixed. Throws DegenerateError when the visibility
/// is zero over the whole search grid.
TapOptimum optimize_tap(const ExperimentParams& params);

struct RecoveryOptimum {
  double eta_a = 0.0;
  double t_r = 0.0;
  double visibility = 0.0;
  /// True when the reported point lies on the balanced line eta_a = T.
  bool balanced = false;
};

/// Maximises the conditional-fringe visibility over (eta_a, t_r) for the
/// given T: a 41 x 41 grid followed by coordinate-wise golden-section
/// refinement. The maximum is generally attained along a curve; when the
/// balanced line eta_a = T reaches it (within 1e-9), that point is
/// reported.
RecoveryOptimum optimize_recovery(double t, const ExperimentParams& fixed);

struct CorollaryRow {
  double t = 0.0;
  double v_uncorrected = 0.0;
  double t_r = 0.0;
  double v_corrected = 0.0;
  // Cross-check with mean-matched Poisson noise.
  double v_uncorrected_poisson = 0.0;
  double v_corrected_poisson = 0.0;
  // Same SPDC noise with its two-photon component removed.
  double v_uncorrected_single = 0.0;
  double v_corrected_single = 0.0;
};

/// Multi-photon noise study: SPDC noise with pair amplitude epsilon, balanced
/// paths (eta_a = T), tap optimised per T. Fields of `base` other than
/// eta_s, eta_n, t, eta_a, t_r and noise are kept.
std::vector<CorollaryRow> corollary_sweep(double epsilon, double eta_s, double eta_n,
                                          std::span<const double> t_grid,
                                          const ExperimentParams& base = {});

/// Eleven interior points 0.05, 0.14, ..., 0.95.
std::vector<double> default_corollary_grid();

}  // namespace noise_eater

#endif  // NOISE_EATER_OPTIMIZE_H_
