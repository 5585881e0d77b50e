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

#include "noise_eater/sources.h"

#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>

namespace noise_eater {
namespace {

// The three-term states are only meaningful for weak sources. These bounds
// keep the Poisson mean on its increasing branch (its maximum sits near
// lambda = 1.54), so epsilon_to_lambda always has a unique root.
constexpr double kMaxEpsilon = 0.4;
constexpr double kMaxLambda = 1.5;

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1], got " +
                                std::to_string(v));
  }
}

}  // namespace

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::kBernoulli:
      return "single";
    case SourceKind::kSpdc:
      return "spdc";
    case SourceKind::kPoisson:
      return "poisson";
  }
  return "?";
}

SourceKind source_kind_from_string(std::string_view name) {
  if (name == "single" || name == "bernoulli") return SourceKind::kBernoulli;
  if (name == "spdc") return SourceKind::kSpdc;
  if (name == "poisson") return SourceKind::kPoisson;
  throw std::invalid_argument("unknown noise kind '" + std::string(name) + "'");
}

void SourceSpec::validate() const {
  require_unit(overlap, "overlap");
  switch (kind) {
    case SourceKind::kBernoulli:
      require_unit(strength, "photon probability");
      break;
    case SourceKind::kSpdc:
      if (!(strength >= 0.0 && strength <= kMaxEpsilon)) {
        throw std::invalid_argument("pair amplitude epsilon must lie in [0, " +
                                    std::to_string(kMaxEpsilon) + "]");
      }
      break;
    case SourceKind::kPoisson:
      if (!(strength >= 0.0 && strength <= kMaxLambda)) {
        throw std::invalid_argument("Poisson scale lambda must lie in [0, " +
                                    std::to_string(kMaxLambda) + "]");
      }
      break;
  }
}

Ensemble bernoulli_photon(double eta, int cutoff) {
  require_unit(eta, "photon probability");
  Ensemble ens;
  if (eta < 1.0) ens.add(1.0 - eta, FockState::basis({0}, cutoff));
  if (eta > 0.0) ens.add(eta, FockState::basis({1}, cutoff));
  return ens;
}

double poisson_mean_photon_number(double lambda) {
  const double l2 = lambda * lambda;
  return l2 * std::exp(-2.0 * lambda) + 0.5 * l2 * l2 * std::exp(-2.0 * lambda);
}

FockState poisson_noise_state(double lambda, int cutoff, bool single_photon_part_only) {
  SourceSpec{SourceKind::kPoisson, lambda}.validate();
  const double e = std::exp(-lambda);
  FockState s(1, cutoff);
  s.add({0}, e);
  s.add({1}, lambda * e);
  if (!single_photon_part_only) s.add({2}, lambda * lambda * e / 2.0);
  s.prune();
  return s.normalized();
}

double spdc_mean_photon_number(double epsilon) {
  const double e2 = epsilon * epsilon;
  return e2 + 2.0 * e2 * e2;
}

FockState spdc_pair_state(double epsilon, int cutoff, bool single_photon_part_only) {
  SourceSpec{SourceKind::kSpdc, epsilon}.validate();
  FockState s(2, cutoff);
  s.add({0, 0}, 1.0 - epsilon * epsilon / 2.0);
  s.add({1, 1}, epsilon);
  if (!single_photon_part_only) s.add({2, 2}, epsilon * epsilon);
  s.prune();
  return s.normalized();
}

double epsilon_to_lambda(double epsilon) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  if (epsilon == 0.0) return 0.0;
  const double target = spdc_mean_photon_number(epsilon);
  auto residual = [&](double lambda) { return poisson_mean_photon_number(lambda) - target; };
  const double hi_value = residual(kMaxLambda);
  if (hi_value < 0.0) {
    std::ostringstream os;
    os << "no lambda in [0, " << kMaxLambda << "] reproduces mean photon number " << target
       << " (epsilon = " << epsilon << "; largest reachable mean is "
       << poisson_mean_photon_number(kMaxLambda) << ")";
    throw NumericError(os.str());
  }
  std::uintmax_t max_iter = 200;
  const auto [lo, hi] = boost::math::tools::toms748_solve(
      residual, 0.0, kMaxLambda, -target, hi_value,
      boost::math::tools::eps_tolerance<double>(52), max_iter);
  const double lambda = 0.5 * (lo + hi);
  if (std::abs(residual(lambda)) > 1e-12) {
    std::ostringstream os;
    os << "lambda solve did not converge: residual " << residual(lambda) << " after "
       << max_iter << " iterations";
    throw NumericError(os.str());
  }
  return lambda;
}

FockState noise_with_overlap(const FockState& state, std::size_t mode,
                             std::size_t orthogonal_mode, double overlap) {
  require_unit(overlap, "overlap");
  for (const auto& [ket, amp] : state) {
    if (ket[orthogonal_mode] != 0) {
      throw std::invalid_argument("orthogonal sub-mode must start empty");
    }
  }
  return apply_beam_splitter(state, {mode, orthogonal_mode}, overlap);
}

FockState noise_with_overlap(const FockState& state, std::size_t mode, double overlap) {
  return noise_with_overlap(state.with_vacuum_modes(1), mode, state.num_modes(), overlap);
}

}  // namespace noise_eater
