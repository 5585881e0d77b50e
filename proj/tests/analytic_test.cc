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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "noise_eater/analytic.h"

namespace ne = noise_eater;

namespace {

ne::ExperimentParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  ne::ExperimentParams p;
  p.eta_s = unit(rng);
  p.eta_n = unit(rng);
  p.t = unit(rng);
  p.t_r = unit(rng);
  p.eta_a = unit(rng);
  p.eta_d = unit(rng);
  p.eta_r = unit(rng);
  return p;
}

}  // namespace

TEST_CASE("branch decomposition of the unconditional fringe") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const ne::ExperimentParams p = random_params(rng);
    const auto c = ne::analytic(p);
    CHECK(std::abs(c.p1 - p.eta_d * p.eta_n * (1.0 - p.eta_s) * (1.0 - p.t) / 2.0) < 1e-15);
    for (double phi : {0.0, 1.0, 2.5, 4.0}) {
      CHECK(std::abs(c.p1 + c.p2(phi) + c.p3(phi) - c.unconditional(phi)) < 1e-14);
    }
  }
}

TEST_CASE("threshold rule inside the two-photon branch") {
  // With eta_s = eta_n = 1 only the two-photon branch exists. Its D1 click
  // probability follows from the single-photon port-A amplitudes s and n
  // and the rule 1 - (1 - eta_d)^k for k photons at D1. Orthogonality of the
  // two single-photon modes gives P(k = 1) = |s|^2 + |n|^2 - 4 |s n|^2.
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double t = unit(rng), ea = unit(rng), ed = unit(rng), phi = 6.0 * unit(rng);
    const std::complex<double> I{0.0, 1.0};
    // Rail A reaches port A with 1/sqrt2, rail B with i/sqrt2.
    const std::complex<double> s = (std::sqrt(ea) * std::exp(I * phi) - std::sqrt(t)) / 2.0;
    const std::complex<double> n = -std::sqrt(1.0 - t) / std::sqrt(2.0);
    const double two = 2.0 * std::norm(s * n);
    const double one = std::norm(s) + std::norm(n) - 2.0 * two;
    const double expected = one * ed + two * (1.0 - (1.0 - ed) * (1.0 - ed));
    ne::ExperimentParams p;
    p.eta_s = 1.0;
    p.eta_n = 1.0;
    p.t = t;
    p.eta_a = ea;
    p.eta_d = ed;
    CHECK(std::abs(ne::analytic(p).p3(phi) - expected) < 1e-14);
  }
}

TEST_CASE("balanced visibility chain") {
  for (double t : {0.05, 0.109, 0.3, 0.5, 0.7, 0.9}) {
    for (double eta : {1e-3, 0.1, 0.7}) {
      ne::ExperimentParams p = ne::ExperimentParams::balanced(t);
      p.eta_s = eta;
      p.eta_n = eta;
      p.eta_d = 0.5;
      const double v = ne::balanced_visibility(p);
      const double b = eta * t * (t - 1.0);
      CHECK(std::abs(v - (2.0 * t + b) / (2.0 + b)) < 1e-15);
      CHECK(std::abs(v - ne::equal_sources_visibility(t, eta)) < 1e-15);
      CHECK(std::abs(v - ne::analytic(p).unconditional_visibility()) < 1e-14);
    }
  }
  ne::ExperimentParams p = ne::ExperimentParams::balanced(1.0);
  CHECK(ne::balanced_visibility(p) == doctest::Approx(1.0).epsilon(1e-15));
  p = ne::ExperimentParams::balanced(0.0);
  CHECK(ne::balanced_visibility(p) == 0.0);
  p.eta_a = 0.5;
  CHECK_THROWS_AS(ne::balanced_visibility(p), std::invalid_argument);
}

TEST_CASE("conditional forms") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const ne::ExperimentParams p = random_params(rng);
    const auto c = ne::analytic(p);
    for (double phi : {0.0, 0.8, 2.0, 3.14, 5.5}) {
      CHECK(std::abs(c.conditional(phi) - c.conditional_from_k(phi)) < 1e-15);
    }
  }
  ne::ExperimentParams p = ne::ExperimentParams::balanced(0.109);
  p.t_r = 0.75;
  const auto c = ne::analytic(p);
  CHECK(std::abs(c.conditional_visibility() - 1.0) < 1e-15);
  CHECK(std::abs(c.conditional(0.0)) < 1e-20);
  CHECK(ne::kThresholdVisibility == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-16));
}

TEST_CASE("distinguishable and mixed closed forms") {
  ne::ExperimentParams p = ne::ExperimentParams::balanced(0.109);
  p.t_r = 0.5;
  p.noise.overlap = 0.0;
  // Best distinguishable fringe: modulation 2 sqrt(eta_a x) over eta_a + 2x.
  const double x = p.t * (1.0 - p.t_r);
  const double lo = ne::distinguishable_conditional(p, 0.0);
  const double hi = ne::distinguishable_conditional(p, std::numbers::pi);
  CHECK(std::abs((hi - lo) / (hi + lo) - 2.0 * std::sqrt(p.eta_a * x) / (p.eta_a + 2.0 * x)) <
        1e-14);
  CHECK(std::abs((hi - lo) / (hi + lo) - ne::kThresholdVisibility) < 1e-14);

  p.noise.overlap = 1.0;
  CHECK(ne::overlap_conditional(p, 1.0) == ne::analytic(p).conditional(1.0));
  p.t_r = 0.0;
  CHECK(ne::overlap_unconditional(p, 1.0) == ne::analytic(p).unconditional(1.0));
  p.t_r = 0.2;
  CHECK_THROWS_AS(ne::overlap_unconditional(p, 1.0), std::invalid_argument);
}
