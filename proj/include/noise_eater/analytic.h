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

#ifndef NOISE_EATER_ANALYTIC_H_
#define NOISE_EATER_ANALYTIC_H_

#include "noise_eater/experiment.h"

namespace noise_eater {

/// Best recovered visibility for a fully distinguishable noise photon.
inline constexpr double kThresholdVisibility = 0.70710678118654752440;

/// Closed-form probabilities for single-photon noise with fully
/// indistinguishable photons. Only eta_s, eta_n, t, t_r, eta_a, eta_d and
/// eta_r are read; the unconditional expressions assume the tap is off.
struct AnalyticCoefficients {
  double eta_s, eta_n, t, t_r, eta_a, eta_d, eta_r;

  // Unconditional D1 click probability is (eta_d / 4)(w1 + w2 cos phi).
  double p1;  // noise photon only
  double w1;
  double w2;

  // Post-selected amplitudes.
  double k1;
  double k2;
  double k3;

  double p2(double phi) const;  // signal photon only
  double p3(double phi) const;  // signal and noise photon, threshold D1
  double unconditional(double phi) const;

  /// |w2| / w1; equals the balanced-path formula when eta_a = t.
  double unconditional_visibility() const;

  /// Coincidence probability of D1 with exactly one photon at D_R.
  double conditional(double phi) const;
  /// Same quantity written through k1, k2, k3.
  double conditional_from_k(double phi) const;
  double conditional_visibility() const;
};

AnalyticCoefficients analytic(const ExperimentParams& params);

/// Visibility for balanced paths (eta_a = t); throws std::invalid_argument
/// otherwise.
double balanced_visibility(const ExperimentParams& params);

/// Balanced-path visibility specialised to eta_s = eta_n and eta_d = 1/2.
double equal_sources_visibility(double t, double eta_s);

/// Closed forms for a fully distinguishable noise photon (any tap setting).
double distinguishable_unconditional(const ExperimentParams& params, double phi);
double distinguishable_conditional(const ExperimentParams& params, double phi);

/// Overlap-weighted mixture s * indistinguishable + (1 - s) * distinguishable.
double overlap_unconditional(const ExperimentParams& params, double phi);
double overlap_conditional(const ExperimentParams& params, double phi);

}  // namespace noise_eater

#endif  // NOISE_EATER_ANALYTIC_H_
