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

#include "noise_eater/validation.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "noise_eater/analytic.h"
#include "noise_eater/experiment.h"

namespace noise_eater {
namespace {

struct Draw {
  ExperimentParams params;
  double phi = 0.0;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double unit() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

  Draw next() {
    Draw d;
    d.params.eta_s = unit();
    d.params.eta_n = unit();
    d.params.eta_d = unit();
    d.params.eta_r = unit();
    d.params.eta_a = unit();
    d.params.t = unit();
    d.params.t_r = unit();
    d.phi = 2.0 * std::numbers::pi * unit();
    return d;
  }

 private:
  std::mt19937_64 engine_;
};

std::string describe(const Draw& d) {
  const ExperimentParams& p = d.params;
  std::ostringstream os;
  os.precision(17);
  os << "eta_s=" << p.eta_s << " eta_n=" << p.eta_n << " eta_d=" << p.eta_d
     << " eta_r=" << p.eta_r << " eta_a=" << p.eta_a << " T=" << p.t << " T_R=" << p.t_r
     << " overlap=" << p.noise.overlap << " phi=" << d.phi;
  return os.str();
}

// Runs `residual` on `draws` samples after `shape` adjusts each one.
OracleCheck run_check(std::string name, Sampler& sampler, int draws,
                      const std::function<void(Draw&)>& shape,
                      const std::function<double(const Draw&)>& residual) {
  OracleCheck check{std::move(name), draws, 0.0, {}};
  for (int i = 0; i < draws; ++i) {
    Draw d = sampler.next();
    shape(d);
    const double r = residual(d);
    if (!(r <= check.max_residual)) {
      check.max_residual = std::isnan(r) ? INFINITY : r;
      check.worst_case = describe(d);
    }
  }
  return check;
}

}  // namespace

std::vector<OracleCheck> run_oracle_suite(std::uint64_t seed, int draws) {
  Sampler sampler(seed);
  std::vector<OracleCheck> out;

  const auto no_tap = [](Draw& d) { d.params.t_r = 0.0; };
  const auto keep = [](Draw&) {};

  out.push_back(run_check("unconditional_vs_w_form", sampler, draws, no_tap, [](const Draw& d) {
    return std::abs(PreparedCircuit(d.params).click_probability(d.phi) -
                    analytic(d.params).unconditional(d.phi));
  }));

  out.push_back(run_check("conditional_vs_closed_form", sampler, draws, keep, [](const Draw& d) {
    return std::abs(PreparedCircuit(d.params).coincidence_probability(d.phi) -
                    analytic(d.params).conditional(d.phi));
  }));

  out.push_back(run_check("conditional_k_form", sampler, draws, keep, [](const Draw& d) {
    const AnalyticCoefficients c = analytic(d.params);
    return std::abs(c.conditional(d.phi) - c.conditional_from_k(d.phi));
  }));

  out.push_back(run_check("branch_sum", sampler, draws, no_tap, [](const Draw& d) {
    const AnalyticCoefficients c = analytic(d.params);
    return std::abs(c.p1 + c.p2(d.phi) + c.p3(d.phi) - c.unconditional(d.phi));
  }));

  // Each branch isolated by forcing the source probabilities to 0 or 1.
  out.push_back(run_check("branch_terms", sampler, draws, no_tap, [](const Draw& d) {
    double worst = 0.0;
    for (auto [es, en] : {std::pair{0.0, 1.0}, {1.0, 0.0}, {1.0, 1.0}}) {
      ExperimentParams p = d.params;
      p.eta_s = es;
      p.eta_n = en;
      const AnalyticCoefficients c = analytic(p);
      const double expected = es == 0.0 ? c.p1 : (en == 0.0 ? c.p2(d.phi) : c.p3(d.phi));
      worst = std::max(worst,
                       std::abs(PreparedCircuit(p).click_probability(d.phi) - expected));
    }
    return worst;
  }));

  const auto distinguishable = [](Draw& d) { d.params.noise.overlap = 0.0; };
  out.push_back(run_check(
      "distinguishable_unconditional", sampler, draws,
      [&](Draw& d) {
        no_tap(d);
        distinguishable(d);
      },
      [](const Draw& d) {
        return std::abs(PreparedCircuit(d.params).click_probability(d.phi) -
                        distinguishable_unconditional(d.params, d.phi));
      }));

  out.push_back(run_check("distinguishable_conditional", sampler, draws, distinguishable,
                          [](const Draw& d) {
                            return std::abs(
                                PreparedCircuit(d.params).coincidence_probability(d.phi) -
                                distinguishable_conditional(d.params, d.phi));
                          }));

  auto partial = [&sampler](Draw& d) { d.params.noise.overlap = sampler.unit(); };
  out.push_back(run_check(
      "overlap_unconditional", sampler, draws,
      [&](Draw& d) {
        no_tap(d);
        partial(d);
      },
      [](const Draw& d) {
        return std::abs(PreparedCircuit(d.params).click_probability(d.phi) -
                        overlap_unconditional(d.params, d.phi));
      }));

  out.push_back(run_check("overlap_conditional", sampler, draws, partial, [](const Draw& d) {
    return std::abs(PreparedCircuit(d.params).coincidence_probability(d.phi) -
                    overlap_conditional(d.params, d.phi));
  }));

  const auto balanced = [](Draw& d) {
    d.params.t_r = 0.0;
    d.params.eta_a = d.params.t;
  };
  out.push_back(run_check("balanced_visibility", sampler, draws, balanced, [](const Draw& d) {
    const double closed = balanced_visibility(d.params);
    return std::max(std::abs(closed - analytic(d.params).unconditional_visibility()),
                    std::abs(closed - unconditional_visibility(d.params)));
  }));

  out.push_back(run_check(
      "equal_sources_visibility", sampler, draws,
      [&](Draw& d) {
        balanced(d);
        d.params.eta_n = d.params.eta_s;
        d.params.eta_d = 0.5;
      },
      [](const Draw& d) {
        return std::abs(balanced_visibility(d.params) -
                        equal_sources_visibility(d.params.t, d.params.eta_s));
      }));

  // Unit visibility needs some coincidences, so T stays inside (0, 1) and
  // both sources are on.
  out.push_back(run_check(
      "unit_recovered_visibility", sampler, draws,
      [](Draw& d) {
        d.params.t = 0.01 + 0.98 * d.params.t;
        d.params.eta_a = d.params.t;
        d.params.t_r = 0.75;
        d.params.eta_s = 0.01 + 0.99 * d.params.eta_s;
        d.params.eta_n = 0.01 + 0.99 * d.params.eta_n;
        d.params.eta_d = 0.01 + 0.99 * d.params.eta_d;
        d.params.eta_r = 0.01 + 0.99 * d.params.eta_r;
      },
      [](const Draw& d) { return std::abs(1.0 - conditional_visibility(d.params)); }));

  return out;
}

}  // namespace noise_eater
