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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "noise_eater/fringe.h"

namespace ne = noise_eater;

TEST_CASE("phase grids") {
  const ne::PhaseGrid dflt;
  const auto v = dflt.values();
  REQUIRE(v.size() == 361);
  CHECK(v.front() == 0.0);
  CHECK(std::abs(v.back() - 2.0 * std::numbers::pi) < 1e-15);
  CHECK(std::abs(v[180] - std::numbers::pi) < 1e-15);

  CHECK(ne::PhaseGrid::from_degrees(0, 360, 10).points == 37);
  CHECK(ne::PhaseGrid::from_degrees(-120, 120, 10).points == 25);
  CHECK(ne::PhaseGrid::from_degrees(0, 355, 10).points == 36);
  CHECK_THROWS_AS(ne::PhaseGrid::from_degrees(0, 360, 0), std::invalid_argument);
  CHECK_THROWS_AS(ne::PhaseGrid::from_degrees(10, 0, 1), std::invalid_argument);
}

TEST_CASE("harmonic fit and visibility") {
  const auto phis = ne::PhaseGrid{}.values();
  std::vector<double> p;
  for (double phi : phis) p.push_back(2.0 + 0.6 * std::cos(phi) - 0.8 * std::sin(phi));
  const ne::HarmonicFit fit = ne::fit_harmonic(phis, p);
  CHECK(std::abs(fit.offset - 2.0) < 1e-12);
  CHECK(std::abs(fit.cos_coeff - 0.6) < 1e-12);
  CHECK(std::abs(fit.sin_coeff + 0.8) < 1e-12);
  CHECK(fit.max_residual < 1e-12);
  CHECK(std::abs(fit.visibility() - 0.5) < 1e-12);

  const ne::Fringe f = ne::Fringe::from_samples(phis, p);
  CHECK(std::abs(f.visibility - 0.5) < 1e-4);  // grid max/min of a shifted cosine
  const auto n = f.normalized();
  CHECK(std::abs(*std::max_element(n.begin(), n.end()) +
                 *std::min_element(n.begin(), n.end()) - 1.0) < 1e-12);

  const std::vector<double> flat(5, 0.0);
  CHECK(ne::visibility(flat) == 0.0);
  const std::vector<double> two{1.0, 3.0};
  CHECK(ne::visibility(two) == 0.5);
}

TEST_CASE("trigonometric interpolation is exact for its degree") {
  auto g = [](double x) {
    return 0.3 + 0.1 * std::cos(x) - 0.05 * std::sin(x) + 0.02 * std::cos(2 * x) +
           0.07 * std::sin(2 * x);
  };
  const auto nodes = ne::TrigPolynomial::interpolation_nodes(2);
  REQUIRE(nodes.size() == 5);
  std::vector<double> samples;
  for (double x : nodes) samples.push_back(g(x));
  const auto poly = ne::TrigPolynomial::interpolate(samples);
  CHECK(poly.degree() == 2);
  for (double x : {0.0, 0.3, 1.7, 4.4, 6.1}) CHECK(std::abs(poly(x) - g(x)) < 1e-15);
  CHECK_THROWS_AS(ne::TrigPolynomial::interpolate(std::vector<double>(4, 0.0)),
                  std::invalid_argument);
}
