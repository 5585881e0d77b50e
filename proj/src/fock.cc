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

#include "noise_eater/fock.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace noise_eater {
namespace {

constexpr int kMaxCount = 255;

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

Complex ipow(Complex base, int exponent) {
  Complex r = 1.0;
  for (int k = 0; k < exponent; ++k) r *= base;
  return r;
}

void check_mode(std::size_t mode, std::size_t num_modes) {
  if (mode >= num_modes) {
    throw std::invalid_argument("mode index " + std::to_string(mode) + " out of range for " +
                                std::to_string(num_modes) + " modes");
  }
}

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(value));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// OccupationVector

OccupationVector::OccupationVector(std::size_t num_modes) {
  if (num_modes > kMaxModes) {
    throw std::invalid_argument("too many modes: " + std::to_string(num_modes));
  }
  num_modes_ = static_cast<std::uint8_t>(num_modes);
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(counts.size()) {
  std::size_t i = 0;
  for (int c : counts) set(i++, c);
}

void OccupationVector::set(std::size_t mode, int count) {
  check_mode(mode, num_modes_);
  if (count < 0 || count > kMaxCount) {
    throw std::invalid_argument("invalid photon count " + std::to_string(count));
  }
  counts_[mode] = static_cast<std::uint8_t>(count);
}

int OccupationVector::total() const {
  return std::accumulate(counts_.begin(), counts_.begin() + num_modes_, 0);
}

OccupationVector OccupationVector::appended(std::size_t extra) const {
  OccupationVector out(num_modes_ + extra);
  std::copy_n(counts_.begin(), num_modes_, out.counts_.begin());
  return out;
}

std::string OccupationVector::to_string() const {
  std::ostringstream os;
  os << '|';
  for (std::size_t i = 0; i < num_modes_; ++i) os << (i ? "," : "") << int(counts_[i]);
  os << '>';
  return os.str();
}

// ---------------------------------------------------------------------------
// FockState

FockState::FockState(std::size_t num_modes, int cutoff, double prune_threshold)
    : num_modes_(num_modes), cutoff_(cutoff), prune_threshold_(prune_threshold) {
  if (num_modes > OccupationVector::kMaxModes) {
    throw std::invalid_argument("too many modes: " + std::to_string(num_modes));
  }
  if (cutoff < 0 || cutoff > kMaxCount) {
    throw std::invalid_argument("invalid photon-number cutoff " + std::to_string(cutoff));
  }
}

FockState FockState::vacuum(std::size_t num_modes, int cutoff) {
  FockState s(num_modes, cutoff);
  s.add(OccupationVector(num_modes), 1.0);
  return s;
}

FockState FockState::basis(const OccupationVector& ket, int cutoff) {
  FockState s(ket.num_modes(), cutoff);
  s.add(ket, 1.0);
  return s;
}

void FockState::add(const OccupationVector& ket, Complex amplitude) {
  if (ket.num_modes() != num_modes_) {
    throw std::invalid_argument("ket " + ket.to_string() + " does not have " +
                                std::to_string(num_modes_) + " modes");
  }
  if (ket.total() > cutoff_) {
    throw CutoffError("ket " + ket.to_string() + " exceeds photon-number cutoff " +
                      std::to_string(cutoff_));
  }
  amplitudes_[ket] += amplitude;
}

Complex FockState::amplitude(const OccupationVector& ket) const {
  auto it = amplitudes_.find(ket);
  return it == amplitudes_.end() ? Complex{} : it->second;
}

double FockState::norm_squared() const {
  double n = 0.0;
  for (const auto& [ket, amp] : amplitudes_) n += std::norm(amp);
  return n;
}

FockState FockState::normalized() const {
  const double n = norm_squared();
  if (n <= 0.0) throw NumericError("cannot normalize a zero state");
  return scaled(1.0 / std::sqrt(n));
}

FockState FockState::scaled(Complex factor) const {
  FockState out(num_modes_, cutoff_, prune_threshold_);
  for (const auto& [ket, amp] : amplitudes_) out.amplitudes_.emplace(ket, amp * factor);
  out.prune();
  return out;
}

FockState FockState::with_vacuum_modes(std::size_t extra) const {
  FockState out(num_modes_ + extra, cutoff_, prune_threshold_);
  for (const auto& [ket, amp] : amplitudes_) out.amplitudes_.emplace(ket.appended(extra), amp);
  return out;
}

FockState FockState::tensor(const FockState& other) const {
  FockState out(num_modes_ + other.num_modes_, std::max(cutoff_, other.cutoff_),
                prune_threshold_);
  for (const auto& [ka, aa] : amplitudes_) {
    for (const auto& [kb, ab] : other.amplitudes_) {
      OccupationVector ket = ka.appended(other.num_modes_);
      for (std::size_t m = 0; m < other.num_modes_; ++m) ket.set(num_modes_ + m, kb[m]);
      out.add(ket, aa * ab);
    }
  }
  out.prune();
  return out;
}

FockState FockState::embed(std::span<const std::size_t> target_modes,
                           std::size_t total_modes) const {
  if (target_modes.size() != num_modes_) {
    throw std::invalid_argument("embedding needs one target per mode");
  }
  std::vector<bool> used(total_modes, false);
  for (std::size_t t : target_modes) {
    check_mode(t, total_modes);
    if (used[t]) throw std::invalid_argument("embedding targets must be distinct");
    used[t] = true;
  }
  FockState out(total_modes, cutoff_, prune_threshold_);
  for (const auto& [ket, amp] : amplitudes_) {
    OccupationVector k(total_modes);
    for (std::size_t m = 0; m < num_modes_; ++m) k.set(target_modes[m], ket[m]);
    out.add(k, amp);
  }
  return out;
}

int FockState::max_photons_in(std::span<const std::size_t> modes) const {
  int best = 0;
  for (const auto& [ket, amp] : amplitudes_) {
    int n = 0;
    for (std::size_t m : modes) n += ket[m];
    best = std::max(best, n);
  }
  return best;
}

void FockState::prune() {
  std::erase_if(amplitudes_,
                [&](const auto& kv) { return std::abs(kv.second) < prune_threshold_; });
}

// ---------------------------------------------------------------------------
// Ensemble

Ensemble::Ensemble(FockState state) { add(1.0, std::move(state)); }

void Ensemble::add(double weight, FockState state) {
  if (!(weight >= 0.0)) throw std::invalid_argument("branch weight must be non-negative");
  if (!branches_.empty() && state.num_modes() != branches_.front().state.num_modes()) {
    throw std::invalid_argument("all branches of an ensemble need the same mode count");
  }
  branches_.push_back({weight, std::move(state)});
}

std::size_t Ensemble::num_modes() const {
  return branches_.empty() ? 0 : branches_.front().state.num_modes();
}

double Ensemble::total_probability() const {
  double p = 0.0;
  for (const auto& b : branches_) p += b.weight * b.state.norm_squared();
  return p;
}

Ensemble Ensemble::tensor(const Ensemble& other) const {
  Ensemble out;
  for (const auto& a : branches_) {
    for (const auto& b : other.branches_) out.add(a.weight * b.weight, a.state.tensor(b.state));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Detectors

DetectorSpec DetectorSpec::threshold(std::size_t mode, double efficiency) {
  return threshold(std::vector<std::size_t>{mode}, efficiency);
}

DetectorSpec DetectorSpec::threshold(std::vector<std::size_t> modes, double efficiency) {
  return DetectorSpec{std::move(modes), efficiency, DetectorKind::kThreshold, 1};
}

DetectorSpec DetectorSpec::exactly(std::vector<std::size_t> modes, int count, double efficiency) {
  return DetectorSpec{std::move(modes), efficiency, DetectorKind::kNumberResolving, count};
}

double DetectorSpec::response(int photons) const {
  switch (kind) {
    case DetectorKind::kThreshold:
      return photons == 0 ? 0.0 : 1.0 - std::pow(1.0 - efficiency, photons);
    case DetectorKind::kNumberResolving:
      return photons == count ? std::pow(efficiency, count) : 0.0;
  }
  return 0.0;
}

void DetectorSpec::validate(std::size_t num_modes) const {
  check_unit_interval(efficiency, "detector efficiency");
  if (modes.empty()) throw std::invalid_argument("detector watches no modes");
  for (std::size_t m : modes) check_mode(m, num_modes);
  if (kind == DetectorKind::kNumberResolving && count < 0) {
    throw std::invalid_argument("requested photon count must be non-negative");
  }
}

// ---------------------------------------------------------------------------
// Linear optics

TwoModeMatrix TwoModeMatrix::adjoint() const {
  return {std::conj(u00), std::conj(u10), std::conj(u01), std::conj(u11)};
}

TwoModeMatrix TwoModeMatrix::beam_splitter(double transmissivity) {
  check_unit_interval(transmissivity, "transmissivity");
  const double t = std::sqrt(transmissivity);
  const Complex r{0.0, std::sqrt(1.0 - transmissivity)};
  return {t, r, r, t};
}

FockState apply_two_mode(const FockState& state, ModePair modes, const TwoModeMatrix& u) {
  const auto [i, j] = modes;
  check_mode(i, state.num_modes());
  check_mode(j, state.num_modes());
  if (i == j) throw std::invalid_argument("beam splitter needs two distinct modes");

  FockState out(state.num_modes(), state.cutoff(), state.prune_threshold());
  for (const auto& [ket, amp] : state) {
    const int ni = ket[i];
    const int nj = ket[j];
    if (ni == 0 && nj == 0) {
      out.add(ket, amp);
      continue;
    }
    const double norm_in = std::sqrt(factorial(ni) * factorial(nj));
    for (int p = 0; p <= ni; ++p) {
      const Complex ci = binomial(ni, p) * ipow(u.u00, p) * ipow(u.u10, ni - p);
      for (int q = 0; q <= nj; ++q) {
        const Complex cj = binomial(nj, q) * ipow(u.u01, q) * ipow(u.u11, nj - q);
        const int mi = p + q;
        const int mj = ni + nj - mi;
        OccupationVector k = ket;
        k.set(i, mi);
        k.set(j, mj);
        out.add(k, amp * ci * cj * std::sqrt(factorial(mi) * factorial(mj)) / norm_in);
      }
    }
  }
  out.prune();
  return out;
}

FockState apply_beam_splitter(const FockState& state, ModePair modes, double transmissivity) {
  return apply_two_mode(state, modes, TwoModeMatrix::beam_splitter(transmissivity));
}

FockState apply_phase_shifter(const FockState& state, std::size_t mode, double phi) {
  check_mode(mode, state.num_modes());
  FockState out(state.num_modes(), state.cutoff(), state.prune_threshold());
  for (const auto& [ket, amp] : state) out.add(ket, amp * std::polar(1.0, phi * ket[mode]));
  return out;
}

FockState apply_loss(const FockState& state, std::size_t mode, double transmissivity) {
  check_mode(mode, state.num_modes());
  check_unit_interval(transmissivity, "loss transmissivity");
  FockState dilated = state.with_vacuum_modes(1);
  return apply_beam_splitter(dilated, {mode, state.num_modes()}, transmissivity);
}

// ---------------------------------------------------------------------------
// Detection

double click_probability(const FockState& state, const DetectorSpec& det) {
  return coincidence_probability(state, std::span<const DetectorSpec>(&det, 1));
}

double click_probability(const Ensemble& ens, const DetectorSpec& det) {
  return coincidence_probability(ens, std::span<const DetectorSpec>(&det, 1));
}

double coincidence_probability(const FockState& state, std::span<const DetectorSpec> dets) {
  std::vector<bool> used(state.num_modes(), false);
  for (const auto& d : dets) {
    d.validate(state.num_modes());
    for (std::size_t m : d.modes) {
      if (used[m]) throw std::invalid_argument("detectors must watch disjoint modes");
      used[m] = true;
    }
  }
  double p = 0.0;
  for (const auto& [ket, amp] : state) {
    double joint = std::norm(amp);
    for (const auto& d : dets) {
      int n = 0;
      for (std::size_t m : d.modes) n += ket[m];
      joint *= d.response(n);
      if (joint == 0.0) break;
    }
    p += joint;
  }
  return p;
}

double coincidence_probability(const Ensemble& ens, std::span<const DetectorSpec> dets) {
  double p = 0.0;
  for (const auto& b : ens) {
    if (b.weight == 0.0) continue;
    p += b.weight * coincidence_probability(b.state, dets);
  }
  return p;
}

}  // namespace noise_eater
