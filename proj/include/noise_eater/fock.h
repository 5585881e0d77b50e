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

#ifndef NOISE_EATER_FOCK_H_
#define NOISE_EATER_FOCK_H_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "noise_eater/errors.h"

namespace noise_eater {

using Complex = std::complex<double>;

inline constexpr int kDefaultCutoff = 4;
inline constexpr double kDefaultPruneThreshold = 1e-15;

/// Photon counts per mode for one multimode Fock basis ket.
///
/// Capacity is fixed so that keys stay trivially copyable; the circuits in
/// this project never need more than kMaxModes modes, ancillas included.
class OccupationVector {
 public:
  static constexpr std::size_t kMaxModes = 24;

  OccupationVector() = default;
  explicit OccupationVector(std::size_t num_modes);
  OccupationVector(std::initializer_list<int> counts);

  std::size_t num_modes() const { return num_modes_; }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  void set(std::size_t mode, int count);
  int total() const;

  /// Same counts followed by `extra` empty modes.
  OccupationVector appended(std::size_t extra) const;

  std::string to_string() const;

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::array<std::uint8_t, kMaxModes> counts_{};
  std::uint8_t num_modes_ = 0;
};

/// Sparse pure state over a multimode Fock basis with a total photon-number
/// cutoff. Amplitudes below the prune threshold are dropped; sub-normalized
/// states are allowed so that weighted branches can be carried around.
class FockState {
 public:
  using Storage = std::map<OccupationVector, Complex>;

  FockState(std::size_t num_modes, int cutoff = kDefaultCutoff,
            double prune_threshold = kDefaultPruneThreshold);

  static FockState vacuum(std::size_t num_modes, int cutoff = kDefaultCutoff);
  static FockState basis(const OccupationVector& ket, int cutoff = kDefaultCutoff);

  std::size_t num_modes() const { return num_modes_; }
  int cutoff() const { return cutoff_; }
  double prune_threshold() const { return prune_threshold_; }
  std::size_t size() const { return amplitudes_.size(); }
  bool empty() const { return amplitudes_.empty(); }

  /// Accumulates `amplitude` onto `ket`. Throws CutoffError if the ket holds
  /// more photons than the cutoff; never truncates silently.
  void add(const OccupationVector& ket, Complex amplitude);
  Complex amplitude(const OccupationVector& ket) const;

  double norm_squared() const;
  FockState normalized() const;
  FockState scaled(Complex factor) const;

  /// Same state with `extra` vacuum modes appended after the existing ones.
  FockState with_vacuum_modes(std::size_t extra) const;

  /// Tensor product; modes of `other` follow the modes of this state.
  FockState tensor(const FockState& other) const;

  /// Relabels mode i of this state as target_modes[i] in a state with
  /// `total_modes` modes. Remaining modes are vacuum.
  FockState embed(std::span<const std::size_t> target_modes, std::size_t total_modes) const;

  /// Largest photon number found in the given modes over the support.
  int max_photons_in(std::span<const std::size_t> modes) const;

  void prune();

  Storage::const_iterator begin() const { return amplitudes_.begin(); }
  Storage::const_iterator end() const { return amplitudes_.end(); }

 private:
  Storage amplitudes_;
  std::size_t num_modes_;
  int cutoff_;
  double prune_threshold_;
};

/// Classical mixture of (sub-normalized) pure branches.
class Ensemble {
 public:
  struct Branch {
    double weight;
    FockState state;
  };

  Ensemble() = default;
  explicit Ensemble(FockState state);

  void add(double weight, FockState state);

  std::size_t size() const { return branches_.size(); }
  const std::vector<Branch>& branches() const { return branches_; }
  std::size_t num_modes() const;

  /// Sum of weight * ||state||^2.
  double total_probability() const;

  /// Branch-wise tensor product; weights multiply.
  Ensemble tensor(const Ensemble& other) const;

  template <typename Fn>
  Ensemble transform(Fn&& fn) const {
    Ensemble out;
    for (const auto& b : branches_) out.add(b.weight, fn(b.state));
    return out;
  }

  auto begin() const { return branches_.begin(); }
  auto end() const { return branches_.end(); }

 private:
  std::vector<Branch> branches_;
};

enum class DetectorKind {
  kThreshold,       // clicks on one or more photons
  kNumberResolving  // clicks only on exactly `count` photons
};

/// A detector watching one or more modes (internal sub-modes of one spatial
/// rail are summed). Each photon is detected independently with probability
/// `efficiency`.
struct DetectorSpec {
  std::vector<std::size_t> modes;
  double efficiency = 1.0;
  DetectorKind kind = DetectorKind::kThreshold;
  int count = 1;

  static DetectorSpec threshold(std::size_t mode, double efficiency);
  static DetectorSpec threshold(std::vector<std::size_t> modes, double efficiency);
  static DetectorSpec exactly(std::vector<std::size_t> modes, int count, double efficiency);

  /// Probability that this detector reports its outcome given `photons`
  /// photons in its modes.
  double response(int photons) const;
  void validate(std::size_t num_modes) const;
};

using ModePair = std::pair<std::size_t, std::size_t>;

/// Column-convention 2x2 mode transformation: creation operator of the first
/// mode maps to u00 a1^+ + u10 a2^+, the second to u01 a1^+ + u11 a2^+.
struct TwoModeMatrix {
  Complex u00, u01, u10, u11;

  TwoModeMatrix adjoint() const;

  /// Transmitted amplitude sqrt(T), reflected amplitude i sqrt(1-T), both ways.
  static TwoModeMatrix beam_splitter(double transmissivity);
};

FockState apply_two_mode(const FockState& state, ModePair modes, const TwoModeMatrix& u);

FockState apply_beam_splitter(const FockState& state, ModePair modes, double transmissivity);

/// Multiplies every ket by exp(i phi n_mode).
FockState apply_phase_shifter(const FockState& state, std::size_t mode, double phi);

/// Pure-loss channel via dilation: couples `mode` to a fresh vacuum ancilla
/// appended as the last mode, with the given intensity transmission.
FockState apply_loss(const FockState& state, std::size_t mode, double transmissivity);

double click_probability(const FockState& state, const DetectorSpec& det);
double click_probability(const Ensemble& ens, const DetectorSpec& det);

/// Joint probability that every detector reports its outcome. Detector mode
/// sets must be disjoint.
double coincidence_probability(const FockState& state, std::span<const DetectorSpec> dets);
double coincidence_probability(const Ensemble& ens, std::span<const DetectorSpec> dets);

}  // namespace noise_eater

#endif  // NOISE_EATER_FOCK_H_
