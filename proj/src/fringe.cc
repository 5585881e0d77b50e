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

#include "noise_eater/fringe.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noise_eater {

std::vector<double> PhaseGrid::values() const {
  if (points == 0) return {};
  if (points == 1) return {start};
  std::vector<double> v(points);
  const double step = (stop - start) / static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) v[i] = start + step * static_cast<double>(i);
  v.back() = stop;
  return v;
}

PhaseGrid PhaseGrid::from_degrees(double start_deg, double stop_deg, double step_deg) {
  if (!(step_deg > 0.0) || !(stop_deg >= start_deg)) {
    throw std::invalid_argument("phase grid needs start <= stop and a positive step");
  }
  const double span = (stop_deg - start_deg) / step_deg;
  const auto intervals = static_cast<std::size_t>(std::floor(span + 1e-9));
  const double last = start_deg + step_deg * static_cast<double>(intervals);
  constexpr double kDeg = std::numbers::pi / 180.0;
  return PhaseGrid{start_deg * kDeg, last * kDeg, intervals + 1};
}

double HarmonicFit::amplitude() const { return std::hypot(cos_coeff, sin_coeff); }

double HarmonicFit::visibility() const { return offset > 0.0 ? amplitude() / offset : 0.0; }

double HarmonicFit::operator()(double phi) const {
  return offset + cos_coeff * std::cos(phi) + sin_coeff * std::sin(phi);
}

HarmonicFit fit_harmonic(std::span<const double> phis, std::span<const double> values) {
  if (phis.size() != values.size()) throw std::invalid_argument("phase/value size mismatch");
  if (phis.size() < 3) throw std::invalid_argument("harmonic fit needs at least 3 samples");
  const auto n = static_cast<Eigen::Index>(phis.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(phis[i]);
    design(i, 2) = std::sin(phis[i]);
    y(i) = values[i];
  }
  const Eigen::Vector3d c = design.colPivHouseholderQr().solve(y);
  HarmonicFit fit{c(0), c(1), c(2), 0.0};
  for (Eigen::Index i = 0; i < n; ++i) {
    fit.max_residual = std::max(fit.max_residual, std::abs(fit(phis[i]) - values[i]));
  }
  return fit;
}

double visibility(std::span<const double> values) {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double sum = *hi + *lo;
  return sum > 0.0 ? (*hi - *lo) / sum : 0.0;
}

Fringe Fringe::from_samples(std::vector<double> phis, std::vector<double> probabilities) {
  Fringe f;
  f.phis = std::move(phis);
  f.probabilities = std::move(probabilities);
  if (f.probabilities.empty()) return f;
  const auto [lo, hi] = std::minmax_element(f.probabilities.begin(), f.probabilities.end());
  f.p_min = *lo;
  f.p_max = *hi;
  f.visibility = noise_eater::visibility(f.probabilities);
  if (f.phis.size() >= 3) f.fit = fit_harmonic(f.phis, f.probabilities);
  return f;
}

std::vector<double> Fringe::normalized() const {
  std::vector<double> out(probabilities.size(), 0.0);
  const double scale = p_max + p_min;
  if (scale <= 0.0) return out;
  std::transform(probabilities.begin(), probabilities.end(), out.begin(),
                 [scale](double p) { return p / scale; });
  return out;
}

std::vector<double> TrigPolynomial::interpolation_nodes(int degree) {
  const int n = 2 * degree + 1;
  std::vector<double> nodes(n);
  for (int j = 0; j < n; ++j) nodes[j] = 2.0 * std::numbers::pi * j / n;
  return nodes;
}

TrigPolynomial TrigPolynomial::interpolate(std::span<const double> samples) {
  const auto n = static_cast<int>(samples.size());
  if (n % 2 != 1) throw std::invalid_argument("trig interpolation needs an odd sample count");
  const int degree = (n - 1) / 2;
  const auto nodes = interpolation_nodes(degree);
  TrigPolynomial p;
  p.cos_.assign(degree, 0.0);
  p.sin_.assign(degree, 0.0);
  for (int j = 0; j < n; ++j) {
    p.constant_ += samples[j] / n;
    for (int k = 1; k <= degree; ++k) {
      p.cos_[k - 1] += 2.0 * samples[j] * std::cos(k * nodes[j]) / n;
      p.sin_[k - 1] += 2.0 * samples[j] * std::sin(k * nodes[j]) / n;
    }
  }
  return p;
}

double TrigPolynomial::operator()(double phi) const {
  double v = constant_;
  for (int k = 1; k <= degree(); ++k) {
    v += cos_[k - 1] * std::cos(k * phi) + sin_[k - 1] * std::sin(k * phi);
  }
  return v;
}

}  // namespace noise_eater
