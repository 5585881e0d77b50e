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

#include "noise_eater/optimize.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "noise_eater/errors.h"

namespace noise_eater {
namespace {

constexpr double kGridStep = 1.0 / (kGridPointsPerAxis - 1);
constexpr double kBalancedSlack = 1e-9;
constexpr int kMaxCoordinateSweeps = 100;

struct Bracket {
  double lo, hi;
};

Bracket around(double x) {
  return {std::max(0.0, x - kGridStep), std::min(1.0, x + kGridStep)};
}

double objective(ExperimentParams p, double eta_a, double t_r) {
  p.eta_a = eta_a;
  p.t_r = t_r;
  if (t_r == 0.0) return 0.0;
  return conditional_visibility(p);
}

}  // namespace

double golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                               double tol) {
  if (!(hi >= lo)) throw std::invalid_argument("golden-section bracket is inverted");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  // The endpoints are candidates too: the maximum may sit on the boundary.
  double best_x = 0.5 * (lo + hi);
  double best_f = f(best_x);
  for (double x : {lo, hi}) {
    const double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }
  return best_x;
}

TapOptimum optimize_tap(const ExperimentParams& params) {
  auto v_of = [&](double t_r) { return objective(params, params.eta_a, t_r); };
  double best_t_r = 0.0;
  double best_v = 0.0;
  for (int j = 0; j < kGridPointsPerAxis; ++j) {
    const double t_r = j * kGridStep;
    const double v = v_of(t_r);
    if (v > best_v) {
      best_v = v;
      best_t_r = t_r;
    }
  }
  if (best_v <= 0.0) {
    std::ostringstream os;
    os << "conditional visibility vanishes for every tap setting (T = " << params.t
       << ", eta_n = " << params.eta_n << "); no optimum";
    throw DegenerateError(os.str());
  }
  const auto [lo, hi] = around(best_t_r);
  const double t_r = golden_section_maximize(v_of, lo, hi);
  const double v = v_of(t_r);
  return v >= best_v ? TapOptimum{t_r, v} : TapOptimum{best_t_r, best_v};
}

RecoveryOptimum optimize_recovery(double t, const ExperimentParams& fixed) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("optimize_recovery needs 0 < T < 1");
  ExperimentParams p = fixed;
  p.t = t;

  RecoveryOptimum best;
  for (int i = 0; i < kGridPointsPerAxis; ++i) {
    for (int j = 0; j < kGridPointsPerAxis; ++j) {
      const double v = objective(p, i * kGridStep, j * kGridStep);
      if (v > best.visibility) best = {i * kGridStep, j * kGridStep, v, false};
    }
  }
  if (best.visibility <= 0.0) {
    std::ostringstream os;
    os << "conditional visibility vanishes over the whole (eta_a, T_R) grid at T = " << t
       << "; no optimum";
    throw DegenerateError(os.str());
  }

  for (int sweep = 0; sweep < kMaxCoordinateSweeps; ++sweep) {
    const RecoveryOptimum start = best;
    {
      const auto [lo, hi] = around(best.eta_a);
      const double x = golden_section_maximize(
          [&](double ea) { return objective(p, ea, best.t_r); }, lo, hi);
      const double v = objective(p, x, best.t_r);
      if (v >= best.visibility) best = {x, best.t_r, v, false};
    }
    {
      const auto [lo, hi] = around(best.t_r);
      const double x = golden_section_maximize(
          [&](double tr) { return objective(p, best.eta_a, tr); }, lo, hi);
      const double v = objective(p, best.eta_a, x);
      if (v >= best.visibility) best = {best.eta_a, x, v, false};
    }
    if (std::abs(best.eta_a - start.eta_a) < kGoldenTolerance &&
        std::abs(best.t_r - start.t_r) < kGoldenTolerance) {
      break;
    }
  }

  ExperimentParams balanced = p;
  balanced.eta_a = t;
  try {
    const TapOptimum tap = optimize_tap(balanced);
    if (tap.visibility >= best.visibility - kBalancedSlack) {
      return {t, tap.t_r, tap.visibility, true};
    }
  } catch (const DegenerateError&) {
    // Balanced line carries no modulation; keep the unconstrained optimum.
  }
  return best;
}

std::vector<CorollaryRow> corollary_sweep(double epsilon, double eta_s, double eta_n,
                                          std::span<const double> t_grid,
                                          const ExperimentParams& base) {
  const double lambda = epsilon_to_lambda(epsilon);

  auto study = [&](double t, SourceSpec noise) {
    ExperimentParams p = base;
    p.eta_s = eta_s;
    p.eta_n = eta_n;
    p.t = t;
    p.eta_a = t;
    p.t_r = 0.0;
    p.noise = noise;
    const double v_unc = unconditional_visibility(p);
    TapOptimum tap;
    try {
      tap = optimize_tap(p);
    } catch (const DegenerateError&) {
      // No coincidences (T at an endpoint or no noise photons): the noise
      // eater cannot act, so the corrected curve equals the uncorrected one.
      tap = {0.0, v_unc};
    }
    return std::pair{v_unc, tap};
  };

  std::vector<CorollaryRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    const double overlap = base.noise.overlap;
    CorollaryRow row;
    row.t = t;
    const auto [v_unc, tap] = study(t, {SourceKind::kSpdc, epsilon, overlap});
    row.v_uncorrected = v_unc;
    row.t_r = tap.t_r;
    row.v_corrected = tap.visibility;
    const auto [vp_unc, tap_p] = study(t, {SourceKind::kPoisson, lambda, overlap});
    row.v_uncorrected_poisson = vp_unc;
    row.v_corrected_poisson = tap_p.visibility;
    const auto [vs_unc, tap_s] = study(t, {SourceKind::kSpdc, epsilon, overlap, true});
    row.v_uncorrected_single = vs_unc;
    row.v_corrected_single = tap_s.visibility;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> default_corollary_grid() {
  std::vector<double> grid(11);
  for (int k = 0; k < 11; ++k) grid[k] = 0.05 + 0.09 * k;
  return grid;
}

}  // namespace noise_eater
