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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Closed forms are written out here independently of the
// library's analytic module.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "noise_eater/counts.h"
#include "noise_eater/experiment.h"
#include "noise_eater/fock.h"
#include "noise_eater/optimize.h"
#include "oracles.h"

namespace ne = noise_eater;

namespace {

constexpr double kPi = std::numbers::pi;
const double kVth = 1.0 / std::sqrt(2.0);

int failures = 0;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(const char* id, bool pass, const std::string& what, double seconds, double limit) {
  const bool in_time = seconds < limit;
  const bool ok = pass && in_time;
  if (!ok) ++failures;
  std::printf("%s [%s] %s (%.2f s, limit %.0f s%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(),
              seconds, limit, in_time ? "" : ", too slow");
  std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// Printed closed forms.
double w_form(const ne::ExperimentParams& p, double phi) {
  const double es = p.eta_s, en = p.eta_n, ed = p.eta_d, ea = p.eta_a, t = p.t;
  const double w1 = 2 * en + es * ea + es * en * t * ed * ea - 2 * en * t - es * en * ed * t +
                    es * t - es * en * ed * ea + es * en * t * t * ed;
  const double w2 = 2 * es * en * ed * std::sqrt(t) * std::sqrt(ea) -
                    2 * es * en * std::pow(t, 1.5) * ed * std::sqrt(ea) -
                    2 * es * std::sqrt(t) * std::sqrt(ea);
  return ed / 4 * (w1 + w2 * std::cos(phi));
}

double conditional_form(const ne::ExperimentParams& p, double phi) {
  return 0.25 * p.eta_s * p.eta_n * p.t_r * p.eta_d * p.eta_r * (1 - p.t) *
         (p.eta_a + 4 * p.t * (1 - p.t_r) - 4 * std::cos(phi) * std::sqrt(p.eta_a * p.t * (1 - p.t_r)));
}

double equal_sources_form(double t, double eta) {
  return (2 * t + eta * t * (t - 1)) / (2 + eta * t * (t - 1));
}

void criterion_1() {
  Stopwatch sw;
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int draws = 200;
  double worst_unc = 0.0, worst_cond = 0.0;
  for (int i = 0; i < draws; ++i) {
    ne::ExperimentParams p;
    p.eta_s = u(rng);
    p.eta_n = u(rng);
    p.eta_a = u(rng);
    p.eta_d = u(rng);
    p.eta_r = u(rng);
    p.t = u(rng);
    p.t_r = u(rng);
    const double phi = 2 * kPi * u(rng);
    const ne::PreparedCircuit cond(p);
    worst_cond = std::max(worst_cond,
                          std::abs(cond.coincidence_probability(phi) - conditional_form(p, phi)));
    p.t_r = 0.0;
    const ne::PreparedCircuit unc(p);
    worst_unc = std::max(worst_unc, std::abs(unc.click_probability(phi) - w_form(p, phi)));
  }
  report("1", worst_unc < 1e-10 && worst_cond < 1e-10,
         fmt("analytic-oracle equality over %d draws: max|dP| unconditional %.2e, "
             "conditional %.2e (< 1e-10)",
             draws, worst_unc, worst_cond),
         sw.seconds(), 10);
}

void criterion_2() {
  Stopwatch sw;
  bool ok = true;
  std::string detail;
  for (double t : {0.109, 0.3, 0.5, 0.7, 0.9}) {
    ne::ExperimentParams p = ne::ExperimentParams::balanced(t);
    p.eta_s = p.eta_n = 1e-3;
    p.eta_d = 0.5;
    const double v = ne::unconditional_fringe(p).visibility;
    const double d7 = std::abs(v - equal_sources_form(t, 1e-3));
    const double dt = std::abs(v - t);
    ok = ok && d7 < 1e-6 && dt <= 2e-3;
    detail += fmt(" T=%.3g:V=%.6f", t, v);
  }
  report("2", ok, "visibility law V(T) matches closed form to 1e-6 and |V-T|<=2e-3;" + detail,
         sw.seconds(), 10);
}

void criterion_3() {
  Stopwatch sw;
  bool ok = true;
  double worst_spread = 0.0;
  std::string detail;
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (double t : {0.109, 0.5, 0.9}) {
    const ne::RecoveryOptimum base = ne::optimize_recovery(t, ne::ExperimentParams{});
    ok = ok && std::abs(base.eta_a - t) < 1e-3 && std::abs(base.t_r - 0.75) < 1e-3 &&
         std::abs(base.visibility - 1.0) < 1e-6;
    detail += fmt(" T=%.3g:(%.6f,%.6f,V=%.9f)", t, base.eta_a, base.t_r, base.visibility);
    for (int k = 0; k < 3; ++k) {
      ne::ExperimentParams p;
      p.eta_s = u(rng);
      p.eta_n = u(rng);
      p.eta_d = u(rng);
      p.eta_r = u(rng);
      const double v = ne::optimize_recovery(t, p).visibility;
      worst_spread = std::max(worst_spread, std::abs(v - base.visibility));
    }
  }
  ok = ok && worst_spread <= 1e-9;
  report("3",
         ok,
         "perfect recovery at (eta_a,T_R)=(T,0.75), V*=1;" + detail +
             fmt("; V* spread over efficiencies %.1e (<= 1e-9)", worst_spread),
         sw.seconds(), 60);
}

void criterion_4() {
  Stopwatch sw;
  ne::ExperimentParams dist;
  dist.noise.overlap = 0.0;
  ne::ExperimentParams same;
  same.noise.overlap = 1.0;
  bool ok = true;
  std::string detail;
  for (double t : {0.109, 0.5}) {
    const double vd = ne::optimize_recovery(t, dist).visibility;
    const double vs = ne::optimize_recovery(t, same).visibility;
    ok = ok && std::abs(vd - kVth) < 1e-3 && std::abs(vs - 1.0) < 1e-6;
    detail += fmt(" T=%.3g: s=0 V=%.9f, s=1 V=%.9f;", t, vd, vs);
  }
  report("4", ok, "distinguishability threshold 1/sqrt2 and unit recovery;" + detail,
         sw.seconds(), 30);
}

void criterion_5() {
  Stopwatch sw;
  const auto grid = ne::default_corollary_grid();
  const auto rows = ne::corollary_sweep(0.05, 1e-3, 1e-3, grid);
  const double seconds = sw.seconds();

  bool a = true, b = true;
  double worst_c = 0.0, worst_c_t = 0.0;
  for (const auto& r : rows) {
    a = a && r.v_corrected > r.v_uncorrected;
    b = b && r.v_uncorrected < r.v_uncorrected_single && r.v_corrected < r.v_corrected_single;
    for (double d : {std::abs(r.v_uncorrected - r.v_uncorrected_poisson),
                     std::abs(r.v_corrected - r.v_corrected_poisson)}) {
      if (d > worst_c) {
        worst_c = d;
        worst_c_t = r.t;
      }
    }
  }
  double min_gain = INFINITY;
  for (const auto& r : rows) min_gain = std::min(min_gain, r.v_corrected - r.v_uncorrected);
  report("5a", a,
         fmt("corrected V > uncorrected V at all %zu T points (smallest gain %.3e)", rows.size(),
             min_gain),
         seconds, 300);
  report("5b", b, "both curves strictly below their single-photon-noise counterparts", seconds,
         300);
  std::string per_t;
  for (const auto& r : rows) {
    per_t += fmt(" %.2f:%.1e", r.t,
                 std::max(std::abs(r.v_uncorrected - r.v_uncorrected_poisson),
                          std::abs(r.v_corrected - r.v_corrected_poisson)));
  }
  report("5c", worst_c <= 1e-3,
         fmt("SPDC vs mean-matched Poisson within 1e-3: worst %.3e at T=%.2f; per T", worst_c,
             worst_c_t) +
             per_t,
         seconds, 300);
}

void criterion_6() {
  Stopwatch sw;
  double worst_oracle = 0.0;
  for (double t : {0.0, 0.1, 0.25, 0.5, 0.6180339887, 0.9, 1.0}) {
    const auto m = oracle::beam_splitter_matrix(t);
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int n2 = 0; n1 + n2 <= 3; ++n2) {
        const auto out = ne::apply_beam_splitter(ne::FockState::basis({n1, n2}), {0, 1}, t);
        const auto want = oracle::transform_two_mode(n1, n2, m);
        for (int k = 0; k <= n1 + n2; ++k) {
          const auto key = std::pair{k, n1 + n2 - k};
          const ne::Complex w = want.count(key) ? want.at(key) : ne::Complex{};
          worst_oracle =
              std::max(worst_oracle, std::abs(out.amplitude({key.first, key.second}) - w));
        }
      }
    }
  }

  std::mt19937_64 rng(606);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::normal_distribution<double> g;
  double worst_norm = 0.0, worst_inverse = 0.0;
  bool conserved = true;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t modes = 2 + trial % 4;
    const int cutoff = 1 + trial % 4;
    ne::FockState s(modes, cutoff);
    for (int term = 0; term < 5; ++term) {
      ne::OccupationVector ket(modes);
      int budget = std::uniform_int_distribution<int>(0, cutoff)(rng);
      for (std::size_t md = 0; md < modes && budget > 0; ++md) {
        const int c = std::uniform_int_distribution<int>(0, budget)(rng);
        ket.set(md, c);
        budget -= c;
      }
      s.add(ket, {g(rng), g(rng)});
    }
    s = s.normalized();
    const std::size_t a = trial % modes, b = (trial + 1) % modes;
    const double t = u(rng), phi = 2 * kPi * u(rng);
    const auto bs = ne::apply_beam_splitter(s, {a, b}, t);
    const auto ps = ne::apply_phase_shifter(s, a, phi);
    worst_norm = std::max({worst_norm, std::abs(bs.norm_squared() - 1.0),
                           std::abs(ps.norm_squared() - 1.0)});
    const auto back =
        ne::apply_two_mode(bs, {a, b}, ne::TwoModeMatrix::beam_splitter(t).adjoint());
    for (const auto& [ket, amp] : s) {
      worst_inverse = std::max(worst_inverse, std::abs(back.amplitude(ket) - amp));
    }
    // Photon number per ket: the beam splitter maps each number sector onto
    // itself, so the number distribution must be unchanged.
    std::vector<double> before(cutoff + 1), after(cutoff + 1);
    for (const auto& [ket, amp] : s) before[ket.total()] += std::norm(amp);
    for (const auto& [ket, amp] : bs) after[ket.total()] += std::norm(amp);
    for (int n = 0; n <= cutoff; ++n) conserved = conserved && std::abs(before[n] - after[n]) < 1e-12;
  }
  report("6",
         worst_oracle < 1e-12 && worst_norm < 1e-12 && worst_inverse < 1e-12 && conserved,
         fmt("Fock oracles: creation-operator expansion max|d| %.1e; 1000 random cases: "
             "norm %.1e, inverse %.1e, number conservation %s",
             worst_oracle, worst_norm, worst_inverse, conserved ? "ok" : "violated"),
         sw.seconds(), 30);
}

void criterion_7() {
  Stopwatch sw;
  std::ostringstream out, err;
  const int code = ne::cli::run({"noise-eater", "sweep", "--t", "0.109"}, out, err);
  double v_unc = NAN, v_rec = NAN;
  std::istringstream in(out.str());
  std::string header, line;
  std::getline(in, header);
  if (std::getline(in, line)) {
    std::istringstream cells(line);
    std::string cell;
    std::vector<double> values;
    while (std::getline(cells, cell, ',')) values.push_back(std::stod(cell));
    if (values.size() >= 4) {
      v_unc = values[1];
      v_rec = values[3];
    }
  }
  const double ratio = v_rec / v_unc;
  const bool ok = code == 0 && v_unc >= 0.09 && v_unc <= 0.12 && std::abs(v_rec - 1.0) < 1e-6 &&
                  ratio >= 8.0;
  report("7", ok,
         fmt("anchors at T=0.109: uncorrected V=%.4f in [0.09,0.12] (measured 0.097+-0.005), "
             "recovered V=%.6f (measured 0.915+-0.017), improvement x%.2f (>= 8)",
             v_unc, v_rec, ratio),
         sw.seconds(), 10);
}

void criterion_8() {
  Stopwatch sw;
  ne::ExperimentParams p = ne::ExperimentParams::balanced(0.109);
  p.grid = ne::PhaseGrid::from_degrees(0, 350, 10);
  const ne::Fringe f = ne::unconditional_fringe(p);
  const double v_true = f.fit.visibility();
  const double rate = 1e9, duration = 4.0;

  const int replicates = 10000;
  double sum = 0.0, sum_sq = 0.0, sum_sigma = 0.0;
  for (int r = 0; r < replicates; ++r) {
    const auto est = ne::estimate_visibility(ne::simulate_counts(f, rate, duration, 0.0, r));
    sum += est.visibility;
    sum_sq += est.visibility * est.visibility;
    sum_sigma += est.sigma;
  }
  const double mean = sum / replicates;
  const double spread = std::sqrt(std::max(0.0, sum_sq / replicates - mean * mean));
  const double se = spread / std::sqrt(static_cast<double>(replicates));
  const double pull = std::abs(mean - v_true) / se;
  const double calibration = (sum_sigma / replicates) / spread;

  const auto first = ne::simulate_counts(f, rate, duration, 50.0, 77);
  const auto again = ne::simulate_counts(f, rate, duration, 50.0, 77);
  const bool deterministic = first.counts == again.counts && first.dark_counts == again.dark_counts;

  report("8", pull < 3.0 && deterministic && std::abs(calibration - 1.0) < 0.1,
         fmt("count emulation: mean V-hat %.6f vs true %.6f, |bias| = %.2f sigma (< 3); "
             "reported sigma / replicate spread = %.3f; fixed seed %s",
             mean, v_true, pull, calibration, deterministic ? "bit-identical" : "NOT identical"),
         sw.seconds(), 60);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion_1, criterion_2, criterion_3,
                                                    criterion_4, criterion_5, criterion_6,
                                                    criterion_7, criterion_8};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& e) {
      ++failures;
      std::printf("FAIL [?] uncaught exception: %s\n", e.what());
    }
  }
  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
