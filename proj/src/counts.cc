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

#include "noise_eater/counts.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "noise_eater/errors.h"

namespace noise_eater {
namespace {

enum Stream : std::uint32_t { kSignalStream = 0, kDarkStream = 1 };

std::uint64_t draw_poisson(double mean, std::uint64_t seed, std::size_t index, Stream stream) {
  if (mean <= 0.0) return 0;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(stream)};
  std::mt19937_64 engine(seq);
  std::poisson_distribution<std::uint64_t> dist(mean);
  return dist(engine);
}

void require_non_negative(double v, const char* name) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument(std::string(name) + " must be finite and non-negative");
  }
}

}  // namespace

CountRecord simulate_counts(const Fringe& fringe, double rate, double duration,
                            double dark_rate, std::uint64_t seed) {
  require_non_negative(rate, "rate");
  require_non_negative(duration, "duration");
  require_non_negative(dark_rate, "dark rate");

  CountRecord rec;
  rec.phis = fringe.phis;
  rec.duration = duration;
  rec.rate = rate;
  rec.dark_rate = dark_rate;
  rec.seed = seed;
  const std::size_t n = fringe.probabilities.size();
  rec.counts.resize(n);
  rec.dark_counts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double dark_mean = dark_rate * duration;
    rec.counts[i] = draw_poisson(rate * fringe.probabilities[i] * duration + dark_mean, seed, i,
                                 kSignalStream);
    rec.dark_counts[i] = draw_poisson(dark_mean, seed, i, kDarkStream);
  }
  return rec;
}

VisibilityEstimate estimate_visibility(const CountRecord& record,
                                       std::span<const std::uint64_t> dark_counts) {
  const std::size_t n = record.counts.size();
  if (record.phis.size() != n) throw std::invalid_argument("phase/count size mismatch");
  if (n < 5) throw std::invalid_argument("visibility estimate needs at least 5 phase samples");
  const auto [lo, hi] = std::minmax_element(record.phis.begin(), record.phis.end());
  if (*hi - *lo < std::numbers::pi - 1e-9) {
    throw std::invalid_argument("phase samples must span at least pi");
  }

  const double dark =
      dark_counts.empty() ? 0.0 : static_cast<double>(*std::min_element(dark_counts.begin(),
                                                                         dark_counts.end()));

  const auto rows = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd y(rows);
  Eigen::VectorXd variance(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    design(i, 0) = 1.0;
    design(i, 1) = std::cos(record.phis[i]);
    design(i, 2) = std::sin(record.phis[i]);
    y(i) = static_cast<double>(record.counts[i]) - dark;
    variance(i) = static_cast<double>(record.counts[i]);
  }

  const Eigen::Matrix3d normal_inv = (design.transpose() * design).inverse();
  const Eigen::MatrixXd projector = normal_inv * design.transpose();
  const Eigen::Vector3d coeff = projector * y;
  const Eigen::Matrix3d cov = projector * variance.asDiagonal() * projector.transpose();

  const double a = coeff(0), b = coeff(1), c = coeff(2);
  if (a <= 0.0) {
    throw NumericError("fitted fringe offset is not positive after dark-count subtraction");
  }
  const double r = std::hypot(b, c);
  const double v = r / a;

  Eigen::Vector3d grad;
  if (r > 0.0) {
    grad << -v / a, b / (a * r), c / (a * r);
  } else {
    grad << 0.0, 1.0 / a, 0.0;
  }

  VisibilityEstimate est;
  est.visibility = v;
  est.sigma = std::sqrt(std::max(0.0, grad.dot(cov * grad)));
  est.fit = HarmonicFit{a, b, c, 0.0};
  for (Eigen::Index i = 0; i < rows; ++i) {
    est.fit.max_residual = std::max(est.fit.max_residual, std::abs(est.fit(record.phis[i]) - y(i)));
  }
  return est;
}

VisibilityEstimate estimate_visibility(const CountRecord& record) {
  return estimate_visibility(record, record.dark_counts);
}

}  // namespace noise_eater
