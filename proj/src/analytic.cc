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

#include "noise_eater/analytic.h"

#include <cmath>
#include <stdexcept>

namespace noise_eater {

double AnalyticCoefficients::p2(double phi) const {
  return eta_d * eta_s * (1.0 - eta_n) *
         (eta_a + t - 2.0 * std::sqrt(eta_a * t) * std::cos(phi)) / 4.0;
}

double AnalyticCoefficients::p3(double phi) const {
  // Threshold D1: a two-photon ket clicks with probability 2 eta_d - eta_d^2.
  const double constant =
      eta_a * (1.0 - eta_d) + 2.0 - t + eta_d * t * (t - 1.0 + eta_a);
  const double modulation = (eta_d * (1.0 - t) - 1.0) * 2.0 * std::sqrt(eta_a * t);
  return 0.25 * eta_d * eta_s * eta_n * (constant + modulation * std::cos(phi));
}

double AnalyticCoefficients::unconditional(double phi) const {
  return eta_d / 4.0 * (w1 + w2 * std::cos(phi));
}

double AnalyticCoefficients::unconditional_visibility() const {
  return w1 > 0.0 ? std::abs(w2) / w1 : 0.0;
}

double AnalyticCoefficients::conditional(double phi) const {
  return 0.25 * eta_s * eta_n * t_r * eta_d * eta_r * (1.0 - t) *
         (eta_a + 4.0 * t * (1.0 - t_r) - 4.0 * std::cos(phi) * std::sqrt(eta_a * t * (1.0 - t_r)));
}

double AnalyticCoefficients::conditional_from_k(double phi) const {
  // D1 sits at the port where the two post-selected paths interfere
  // destructively at phi = 0.
  return eta_d * eta_r * k1 * k1 / 2.0 *
         (k2 * k2 + k3 * k3 - 2.0 * k2 * k3 * std::cos(phi));
}

double AnalyticCoefficients::conditional_visibility() const {
  const double denom = k2 * k2 + k3 * k3;
  return denom > 0.0 ? 2.0 * k2 * k3 / denom : 0.0;
}

AnalyticCoefficients analytic(const ExperimentParams& params) {
  AnalyticCoefficients c{};
  c.eta_s = params.eta_s;
  c.eta_n = params.eta_n;
  c.t = params.t;
  c.t_r = params.t_r;
  c.eta_a = params.eta_a;
  c.eta_d = params.eta_d;
  c.eta_r = params.eta_r;

  const double es = c.eta_s, en = c.eta_n, t = c.t, ea = c.eta_a, ed = c.eta_d, tr = c.t_r;
  c.p1 = ed * en * (1.0 - es) * (1.0 - t) / 2.0;
  c.w1 = 2.0 * en + es * ea + es * en * t * ed * ea - 2.0 * en * t - es * en * ed * t + es * t -
         es * en * ed * ea + es * en * t * t * ed;
  c.w2 = 2.0 * es * en * ed * std::sqrt(t) * std::sqrt(ea) -
         2.0 * es * en * std::pow(t, 1.5) * ed * std::sqrt(ea) -
         2.0 * es * std::sqrt(t) * std::sqrt(ea);
  c.k1 = std::sqrt(es * en / 2.0);
  c.k2 = 2.0 * std::sqrt(t * (1.0 - t) * tr * (1.0 - tr));
  c.k3 = std::sqrt(ea * (1.0 - t) * tr);
  return c;
}

double balanced_visibility(const ExperimentParams& params) {
  if (std::abs(params.eta_a - params.t) > 1e-12) {
    throw std::invalid_argument("balanced-path visibility needs eta_a == T");
  }
  const double es = params.eta_s, en = params.eta_n, ed = params.eta_d, t = params.t;
  const double denom = es * en * ed * t * (t - 1.0) + es * t + en * (1.0 - t);
  if (denom <= 0.0) return 0.0;
  return es * t * (en * t * ed - en * ed + 1.0) / denom;
}

double equal_sources_visibility(double t, double eta_s) {
  const double bunching = eta_s * t * (t - 1.0);
  return (2.0 * t + bunching) / (2.0 + bunching);
}

namespace {

// Single-photon probabilities of reaching output port A of the final beam
// splitter, for the signal and for a noise photon that cannot interfere
// with it.
double signal_to_d1(const ExperimentParams& p, double phi) {
  const double x = p.t * (1.0 - p.t_r);
  return (p.eta_a + x - 2.0 * std::sqrt(p.eta_a * x) * std::cos(phi)) / 4.0;
}

double noise_to_d1(const ExperimentParams& p) { return (1.0 - p.t) * (1.0 - p.t_r) / 2.0; }

}  // namespace

double distinguishable_unconditional(const ExperimentParams& p, double phi) {
  const double ps = p.eta_d * signal_to_d1(p, phi);
  const double pn = p.eta_d * noise_to_d1(p);
  return (1.0 - p.eta_s) * p.eta_n * pn + p.eta_s * (1.0 - p.eta_n) * ps +
         p.eta_s * p.eta_n * (1.0 - (1.0 - ps) * (1.0 - pn));
}

double distinguishable_conditional(const ExperimentParams& p, double phi) {
  const double x = p.t * (1.0 - p.t_r);
  return 0.25 * p.eta_s * p.eta_n * p.eta_d * p.eta_r * p.t_r * (1.0 - p.t) *
         (p.eta_a + 2.0 * x - 2.0 * std::sqrt(p.eta_a * x) * std::cos(phi));
}

double overlap_unconditional(const ExperimentParams& p, double phi) {
  if (p.t_r != 0.0) {
    throw std::invalid_argument("closed-form unconditional probability assumes T_R = 0");
  }
  const double s = p.noise.overlap;
  return s * analytic(p).unconditional(phi) + (1.0 - s) * distinguishable_unconditional(p, phi);
}

double overlap_conditional(const ExperimentParams& p, double phi) {
  const double s = p.noise.overlap;
  return s * analytic(p).conditional(phi) + (1.0 - s) * distinguishable_conditional(p, phi);
}

}  // namespace noise_eater
