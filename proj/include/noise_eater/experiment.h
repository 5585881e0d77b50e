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

#ifndef NOISE_EATER_EXPERIMENT_H_
#define NOISE_EATER_EXPERIMENT_H_

#include <cstddef>

#include "noise_eater/fock.h"
#include "noise_eater/fringe.h"
#include "noise_eater/sources.h"

namespace noise_eater {

enum class TapDetection {
  kExactlyOne,  // D_R projects on exactly one photon in the tap mode
  kThreshold    // D_R clicks on one or more photons
};

/// Every dial of the noise-eater interferometer.
///
/// The signal is a single photon present with probability eta_s. For a
/// single-photon (Bernoulli) noise source, eta_n is the probability the noise
/// photon is present and noise.strength is ignored. For SPDC and Poisson
/// noise, eta_n is a per-photon transmission applied to the noise state.
struct ExperimentParams {
  double eta_s = 1e-3;
  double eta_n = 1e-3;
  double t = 0.109;    // noise-coupling beam splitter, rail B transmission
  double t_r = 0.0;    // tap beam splitter, fraction of rail B sent to D_R
  double eta_a = 0.109;  // attenuator in rail A
  double eta_d = 0.5;
  double eta_r = 0.5;
  SourceSpec noise{};
  PhaseGrid grid{};
  int cutoff = kDefaultCutoff;
  TapDetection tap_detection = TapDetection::kExactlyOne;
  /// Adds a (1 - t_r) attenuator to rail A to mirror the tap loss.
  bool compensate_tap = false;

  void validate() const;

  /// Defaults with eta_a = t (balanced paths).
  static ExperimentParams balanced(double t);
};

/// Fixed mode indices of the circuit. Each spatial rail carries a matched and
/// an orthogonal internal sub-mode; loss ancillas follow kFixedModes.
struct CircuitModes {
  static constexpr std::size_t kA = 0;
  static constexpr std::size_t kAOrth = 1;
  static constexpr std::size_t kB = 2;
  static constexpr std::size_t kBOrth = 3;
  static constexpr std::size_t kNoise = 4;  // becomes the discarded port X
  static constexpr std::size_t kNoiseOrth = 5;
  static constexpr std::size_t kTap = 6;
  static constexpr std::size_t kTapOrth = 7;
  static constexpr std::size_t kHerald = 8;
  static constexpr std::size_t kFixedModes = 9;
};

/// The circuit with every phase-independent element already applied:
/// sources, BS1(1/2), attenuator, noise coupling BS(T), tap BS. Only the
/// phase shifter and the final merging beam splitter depend on phi.
class PreparedCircuit {
 public:
  explicit PreparedCircuit(const ExperimentParams& params);

  const ExperimentParams& params() const { return params_; }
  const Ensemble& before_phase() const { return before_phase_; }

  /// State after the phase shifter, before the final beam splitter.
  Ensemble before_merge(double phi) const;
  /// Full output ensemble.
  Ensemble output(double phi) const;

  /// D1 watches output port A of the final beam splitter.
  DetectorSpec signal_detector() const;
  DetectorSpec tap_detector() const;

  double click_probability(double phi) const;
  double coincidence_probability(double phi) const;

  /// Highest photon number in rail A at the phase shifter; bounds the
  /// harmonic degree of every fringe.
  int phase_degree() const { return phase_degree_; }

 private:
  ExperimentParams params_;
  Ensemble before_phase_;
  int phase_degree_ = 0;
};

Ensemble run_circuit(const ExperimentParams& params, double phi);

/// D1 click probability over params.grid.
Fringe unconditional_fringe(const ExperimentParams& params);

/// D1 and D_R coincidence probability over params.grid. Throws
/// DegenerateError when t_r is zero.
Fringe conditional_fringe(const ExperimentParams& params);

/// Exact trigonometric-polynomial model of a fringe, built from
/// 2 * phase_degree + 1 simulated samples.
class FringeModel {
 public:
  static FringeModel unconditional(const PreparedCircuit& circuit);
  static FringeModel conditional(const PreparedCircuit& circuit);

  double operator()(double phi) const { return poly_(phi); }
  std::vector<double> sample(std::span<const double> phis) const;

 private:
  explicit FringeModel(TrigPolynomial poly) : poly_(std::move(poly)) {}
  TrigPolynomial poly_;
};

/// Dense-grid visibility of the conditional fringe, via FringeModel. Returns
/// zero when no coincidences occur.
double conditional_visibility(const ExperimentParams& params);
double unconditional_visibility(const ExperimentParams& params);

}  // namespace noise_eater

#endif  // NOISE_EATER_EXPERIMENT_H_
