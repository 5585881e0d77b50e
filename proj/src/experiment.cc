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

#include "noise_eater/experiment.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noise_eater {
namespace {

using M = CircuitModes;

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(v));
  }
}

// Highest occupation of the herald mode in the pair state.
constexpr int kHeraldPhotons = 2;

// Embeds the signal photon (rail A) and the noise source into the fixed layout.
// The cutoff bounds the photons entering the interferometer; the herald mode
// never does, so it is carried with its own allowance.
Ensemble prepare_sources(const ExperimentParams& p) {
  // Room for the largest source ket (signal plus pair); the interferometer
  // photons are checked against p.cutoff below.
  const int allowance = p.noise.kind == SourceKind::kSpdc ? 1 + 2 * kHeraldPhotons : 0;
  const Ensemble signal = bernoulli_photon(p.eta_s, p.cutoff + allowance);

  Ensemble noise;
  std::vector<std::size_t> noise_targets;
  switch (p.noise.kind) {
    case SourceKind::kBernoulli:
      noise = bernoulli_photon(p.eta_n, p.cutoff);
      noise_targets = {M::kNoise};
      break;
    case SourceKind::kSpdc:
      noise = Ensemble(spdc_pair_state(p.noise.strength, p.cutoff + allowance,
                                       p.noise.single_photon_part_only));
      noise_targets = {M::kHerald, M::kNoise};
      break;
    case SourceKind::kPoisson:
      noise = Ensemble(poisson_noise_state(p.noise.strength, p.cutoff,
                                           p.noise.single_photon_part_only));
      noise_targets = {M::kNoise};
      break;
  }

  std::vector<std::size_t> targets{M::kA};
  targets.insert(targets.end(), noise_targets.begin(), noise_targets.end());
  const Ensemble ens = signal.tensor(noise).transform(
      [&](const FockState& s) { return s.embed(targets, M::kFixedModes); });
  for (const auto& b : ens) {
    for (const auto& [ket, amp] : b.state) {
      if (ket.total() - ket[M::kHerald] > p.cutoff) {
        throw CutoffError("ket " + ket.to_string() + " puts more than " +
                          std::to_string(p.cutoff) + " photons into the interferometer");
      }
    }
  }
  return ens;
}

template <typename Fn>
Ensemble each(const Ensemble& ens, Fn&& fn) {
  return ens.transform(std::forward<Fn>(fn));
}

constexpr std::array<std::size_t, 2> kRailA{M::kA, M::kAOrth};

}  // namespace

void ExperimentParams::validate() const {
  require_unit(eta_s, "eta_s");
  require_unit(eta_n, "eta_n");
  require_unit(t, "T");
  require_unit(t_r, "T_R");
  require_unit(eta_a, "eta_a");
  require_unit(eta_d, "eta_d");
  require_unit(eta_r, "eta_r");
  noise.validate();
  if (grid.points == 0) throw std::invalid_argument("phase grid is empty");
  if (cutoff < 1) throw std::invalid_argument("photon-number cutoff must be at least 1");
}

ExperimentParams ExperimentParams::balanced(double t) {
  ExperimentParams p;
  p.t = t;
  p.eta_a = t;
  return p;
}

PreparedCircuit::PreparedCircuit(const ExperimentParams& params) : params_(params) {
  params_.validate();
  const auto& p = params_;

  Ensemble ens = prepare_sources(p);
  if (p.noise.kind != SourceKind::kBernoulli) {
    ens = each(ens, [&](const FockState& s) { return apply_loss(s, M::kNoise, p.eta_n); });
  }
  ens = each(ens, [&](const FockState& s) {
    return noise_with_overlap(s, M::kNoise, M::kNoiseOrth, p.noise.overlap);
  });

  // BS1 creates the dual-rail qubit.
  ens = each(ens, [](const FockState& s) {
    return apply_beam_splitter(apply_beam_splitter(s, {M::kA, M::kB}, 0.5),
                               {M::kAOrth, M::kBOrth}, 0.5);
  });
  // Rail A: attenuator (and optional tap compensation).
  ens = each(ens, [&](const FockState& s) {
    return apply_loss(apply_loss(s, M::kA, p.eta_a), M::kAOrth, p.eta_a);
  });
  if (p.compensate_tap) {
    ens = each(ens, [&](const FockState& s) {
      return apply_loss(apply_loss(s, M::kA, 1.0 - p.t_r), M::kAOrth, 1.0 - p.t_r);
    });
  }
  // Rail B: noise coupling, then the tap that feeds D_R.
  ens = each(ens, [&](const FockState& s) {
    return apply_beam_splitter(apply_beam_splitter(s, {M::kB, M::kNoise}, p.t),
                               {M::kBOrth, M::kNoiseOrth}, p.t);
  });
  ens = each(ens, [&](const FockState& s) {
    return apply_beam_splitter(apply_beam_splitter(s, {M::kB, M::kTap}, 1.0 - p.t_r),
                               {M::kBOrth, M::kTapOrth}, 1.0 - p.t_r);
  });

  before_phase_ = std::move(ens);
  for (const auto& b : before_phase_) {
    phase_degree_ = std::max(phase_degree_, b.state.max_photons_in(kRailA));
  }
}

Ensemble PreparedCircuit::before_merge(double phi) const {
  return each(before_phase_, [phi](const FockState& s) {
    return apply_phase_shifter(apply_phase_shifter(s, M::kA, phi), M::kAOrth, phi);
  });
}

Ensemble PreparedCircuit::output(double phi) const {
  return each(before_merge(phi), [](const FockState& s) {
    return apply_beam_splitter(apply_beam_splitter(s, {M::kA, M::kB}, 0.5),
                               {M::kAOrth, M::kBOrth}, 0.5);
  });
}

DetectorSpec PreparedCircuit::signal_detector() const {
  return DetectorSpec::threshold({M::kA, M::kAOrth}, params_.eta_d);
}

DetectorSpec PreparedCircuit::tap_detector() const {
  if (params_.tap_detection == TapDetection::kThreshold) {
    return DetectorSpec::threshold({M::kTap, M::kTapOrth}, params_.eta_r);
  }
  return DetectorSpec::exactly({M::kTap, M::kTapOrth}, 1, params_.eta_r);
}

double PreparedCircuit::click_probability(double phi) const {
  return noise_eater::click_probability(output(phi), signal_detector());
}

double PreparedCircuit::coincidence_probability(double phi) const {
  const std::array<DetectorSpec, 2> dets{signal_detector(), tap_detector()};
  return noise_eater::coincidence_probability(output(phi), dets);
}

Ensemble run_circuit(const ExperimentParams& params, double phi) {
  return PreparedCircuit(params).output(phi);
}

Fringe unconditional_fringe(const ExperimentParams& params) {
  const PreparedCircuit circuit(params);
  auto phis = params.grid.values();
  std::vector<double> p(phis.size());
  std::transform(phis.begin(), phis.end(), p.begin(),
                 [&](double phi) { return circuit.click_probability(phi); });
  return Fringe::from_samples(std::move(phis), std::move(p));
}

Fringe conditional_fringe(const ExperimentParams& params) {
  if (params.t_r == 0.0) {
    throw DegenerateError("conditional fringe needs T_R > 0: no photon can reach D_R");
  }
  const PreparedCircuit circuit(params);
  auto phis = params.grid.values();
  std::vector<double> p(phis.size());
  std::transform(phis.begin(), phis.end(), p.begin(),
                 [&](double phi) { return circuit.coincidence_probability(phi); });
  return Fringe::from_samples(std::move(phis), std::move(p));
}

FringeModel FringeModel::unconditional(const PreparedCircuit& circuit) {
  const auto nodes = TrigPolynomial::interpolation_nodes(circuit.phase_degree());
  std::vector<double> samples(nodes.size());
  std::transform(nodes.begin(), nodes.end(), samples.begin(),
                 [&](double phi) { return circuit.click_probability(phi); });
  return FringeModel(TrigPolynomial::interpolate(samples));
}

FringeModel FringeModel::conditional(const PreparedCircuit& circuit) {
  const auto nodes = TrigPolynomial::interpolation_nodes(circuit.phase_degree());
  std::vector<double> samples(nodes.size());
  std::transform(nodes.begin(), nodes.end(), samples.begin(),
                 [&](double phi) { return circuit.coincidence_probability(phi); });
  return FringeModel(TrigPolynomial::interpolate(samples));
}

std::vector<double> FringeModel::sample(std::span<const double> phis) const {
  std::vector<double> out(phis.size());
  // Interpolation round-off can dip a hair below zero at a dark fringe.
  std::transform(phis.begin(), phis.end(), out.begin(),
                 [this](double phi) { return std::max(0.0, (*this)(phi)); });
  return out;
}

double conditional_visibility(const ExperimentParams& params) {
  const PreparedCircuit circuit(params);
  const auto grid = params.grid.values();
  return visibility(FringeModel::conditional(circuit).sample(grid));
}

double unconditional_visibility(const ExperimentParams& params) {
  const PreparedCircuit circuit(params);
  const auto grid = params.grid.values();
  return visibility(FringeModel::unconditional(circuit).sample(grid));
}

}  // namespace noise_eater
