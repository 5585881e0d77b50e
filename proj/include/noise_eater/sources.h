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

#ifndef NOISE_EATER_SOURCES_H_
#define NOISE_EATER_SOURCES_H_

#include <string_view>

#include "noise_eater/fock.h"

namespace noise_eater {

enum class SourceKind {
  kBernoulli,  // one photon with probability `strength`
  kSpdc,       // pair state with pair amplitude `strength`
  kPoisson     // truncated Poisson amplitudes with scale `strength`
};

std::string_view to_string(SourceKind kind);
SourceKind source_kind_from_string(std::string_view name);

/// Noise source description. `overlap` is the squared overlap between the
/// internal mode of the noise photons and that of the signal.
struct SourceSpec {
  SourceKind kind = SourceKind::kBernoulli;
  double strength = 0.0;
  double overlap = 1.0;
  /// Drop the two-photon component (single-photon part only, renormalized).
  bool single_photon_part_only = false;

  void validate() const;
};

/// {(1-eta, |0>), (eta, |1>)} on one mode.
Ensemble bernoulli_photon(double eta, int cutoff = kDefaultCutoff);

/// Mean photon number of p0|0> + p1|1> + p2|2> with p_k = lambda^k e^-lambda / k!,
/// evaluated on the unnormalized amplitudes.
double poisson_mean_photon_number(double lambda);

/// One-mode state with amplitudes p0, p1, p2 as above, renormalized.
FockState poisson_noise_state(double lambda, int cutoff = kDefaultCutoff,
                              bool single_photon_part_only = false);

/// Noise-mode mean of (1 - eps^2/2)|00> + eps|11> + eps^2|22>, unnormalized.
double spdc_mean_photon_number(double epsilon);

/// Two-mode (herald, noise) pair state with the amplitudes above, renormalized.
FockState spdc_pair_state(double epsilon, int cutoff = kDefaultCutoff,
                          bool single_photon_part_only = false);

/// The lambda whose Poisson-state mean equals the SPDC noise-mode mean for
/// `epsilon`. Throws NumericError when no root exists on the monotone branch.
double epsilon_to_lambda(double epsilon);

/// Splits `mode` into a matched sub-mode (kept at `mode`) and an orthogonal
/// sub-mode `orthogonal_mode`: each photon becomes sqrt(s) matched +
/// i sqrt(1-s) orthogonal. The orthogonal sub-mode must be empty.
FockState noise_with_overlap(const FockState& state, std::size_t mode,
                             std::size_t orthogonal_mode, double overlap);

/// Convenience overload: appends the orthogonal sub-mode after the existing
/// modes of a one-mode-per-rail state.
FockState noise_with_overlap(const FockState& state, std::size_t mode, double overlap);

}  // namespace noise_eater

#endif  // NOISE_EATER_SOURCES_H_
