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

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "noise_eater/analytic.h"
#include "noise_eater/counts.h"
#include "noise_eater/errors.h"
#include "noise_eater/experiment.h"
#include "noise_eater/optimize.h"
#include "noise_eater/sources.h"
#include "noise_eater/validation.h"

namespace noise_eater::cli {
namespace {

using nlohmann::json;

constexpr double kValidateThreshold = 1e-9;
// Second stream for the coincidence counts, so the two records of one run
// are independent.
constexpr std::uint64_t kConditionalSeedOffset = 0x9E3779B97F4A7C15ULL;

struct Options {
  double eta_s = 1e-3;
  double eta_n = 1e-3;
  double eta_a = 0.0;
  double eta_d = 0.5;
  double eta_r = 0.5;
  std::string t = "0.109";
  double t_r = 0.75;
  double overlap = 1.0;
  std::string noise = "single";
  double epsilon = 0.05;
  double lambda = 0.0;
  std::string phi_grid = "0:360:1";
  int n_max = kDefaultCutoff;
  std::uint64_t seed = 1;
  double rate = 1e9;
  double duration = 1.0;
  double dark_rate = 100.0;
  std::string format = "csv";
  std::string out;
  std::string tap_detector = "exact";
  bool compensate_tap = false;
  int draws = 200;

  CLI::Option* eta_a_opt = nullptr;
  CLI::Option* t_opt = nullptr;
  CLI::Option* lambda_opt = nullptr;
};

struct DegreeGrid {
  PhaseGrid grid;
  double start_deg = 0.0;
  double step_deg = 0.0;

  double degrees(std::size_t i) const { return start_deg + static_cast<double>(i) * step_deg; }
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_number(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw std::invalid_argument("not a finite number: '" + text + "'");
  }
  return v;
}

DegreeGrid parse_phi_grid(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw std::invalid_argument("--phi-grid expects start:stop:step");
  DegreeGrid g;
  g.start_deg = to_number(parts[0]);
  g.step_deg = to_number(parts[2]);
  g.grid = PhaseGrid::from_degrees(g.start_deg, to_number(parts[1]), g.step_deg);
  return g;
}

double single_value(const Options& o) {
  const auto values = parse_values(o.t);
  if (values.size() != 1) throw std::invalid_argument("this command takes a single --t value");
  return values.front();
}

SourceSpec noise_spec(const Options& o) {
  SourceSpec spec;
  spec.kind = source_kind_from_string(o.noise);
  spec.overlap = o.overlap;
  switch (spec.kind) {
    case SourceKind::kBernoulli:
      break;
    case SourceKind::kSpdc:
      spec.strength = o.epsilon;
      break;
    case SourceKind::kPoisson:
      spec.strength = o.lambda_opt->count() > 0 ? o.lambda : epsilon_to_lambda(o.epsilon);
      break;
  }
  spec.validate();
  return spec;
}

ExperimentParams params_for(const Options& o, double t) {
  ExperimentParams p;
  p.eta_s = o.eta_s;
  p.eta_n = o.eta_n;
  p.eta_d = o.eta_d;
  p.eta_r = o.eta_r;
  p.t = t;
  p.eta_a = o.eta_a_opt->count() > 0 ? o.eta_a : t;
  p.t_r = o.t_r;
  p.noise = noise_spec(o);
  p.grid = parse_phi_grid(o.phi_grid).grid;
  p.cutoff = o.n_max;
  p.tap_detection = o.tap_detector == "threshold" ? TapDetection::kThreshold
                                                  : TapDetection::kExactlyOne;
  p.compensate_tap = o.compensate_tap;
  p.validate();
  return p;
}

json params_meta(const ExperimentParams& p) {
  return {{"eta_s", p.eta_s},
          {"eta_n", p.eta_n},
          {"eta_a", p.eta_a},
          {"eta_d", p.eta_d},
          {"eta_r", p.eta_r},
          {"T", p.t},
          {"T_R", p.t_r},
          {"noise", std::string(to_string(p.noise.kind))},
          {"noise_strength", p.noise.strength},
          {"overlap", p.noise.overlap},
          {"n_max", p.cutoff},
          {"tap_detector", p.tap_detection == TapDetection::kThreshold ? "threshold" : "exact"},
          {"compensate_tap", p.compensate_tap}};
}

// Unconditional (tap off) and conditional fringes for one parameter set.
std::pair<Fringe, Fringe> fringes(const ExperimentParams& p) {
  ExperimentParams unc = p;
  unc.t_r = 0.0;
  return {unconditional_fringe(unc), conditional_fringe(p)};
}

Table cmd_fringe(const Options& o) {
  const ExperimentParams p = params_for(o, single_value(o));
  const DegreeGrid g = parse_phi_grid(o.phi_grid);
  const auto [unc, cond] = fringes(p);
  const auto unc_norm = unc.normalized();
  const auto cond_norm = cond.normalized();

  Table t;
  t.columns = {"phi_deg", "P_uncorrected", "P_conditional", "P_normalized_uncorrected",
               "P_normalized_conditional"};
  for (std::size_t i = 0; i < unc.phis.size(); ++i) {
    t.rows.push_back({g.degrees(i), unc.probabilities[i], cond.probabilities[i], unc_norm[i],
                      cond_norm[i]});
  }
  t.summary = {{"V_uncorrected", unc.visibility}, {"V_conditional", cond.visibility}};
  t.meta["params"] = params_meta(p);
  return t;
}

Table cmd_sweep(const Options& o) {
  const auto ts = parse_values(o.t_opt->count() > 0 ? o.t : "0:1:0.05");
  Table t;
  t.columns = {"T",    "V_uncorrected_coherent", "V_uncorrected_distinguishable", "V_recovered",
               "V_th", "recovery_degenerate"};
  for (double tv : ts) {
    ExperimentParams p = params_for(o, tv);
    ExperimentParams unc = p;
    unc.t_r = 0.0;
    unc.noise.overlap = 1.0;
    const double v_coherent = unconditional_visibility(unc);
    unc.noise.overlap = 0.0;
    const double v_dist = unconditional_visibility(unc);

    double v_rec = v_coherent;
    bool degenerate = true;
    if (tv > 0.0 && tv < 1.0) {
      try {
        v_rec = optimize_recovery(tv, p).visibility;
        degenerate = false;
      } catch (const DegenerateError&) {
        // No coincidences at any setting; the uncorrected value stands.
      }
    }
    t.rows.push_back(
        {tv, v_coherent, v_dist, v_rec, kThresholdVisibility, degenerate ? 1 : 0});
  }
  t.meta["params"] = params_meta(params_for(o, ts.empty() ? 0.0 : ts.front()));
  t.meta["params"].erase("T");
  return t;
}

Table cmd_optimize(const Options& o) {
  Table t;
  t.columns = {"T", "eta_a", "t_r", "V", "balanced"};
  for (double tv : parse_values(o.t)) {
    const RecoveryOptimum r = optimize_recovery(tv, params_for(o, tv));
    t.rows.push_back({tv, r.eta_a, r.t_r, r.visibility, r.balanced ? 1 : 0});
  }
  return t;
}

Table cmd_corollary(const Options& o) {
  const std::vector<double> ts =
      o.t_opt->count() > 0 ? parse_values(o.t) : default_corollary_grid();
  ExperimentParams base = params_for(o, 0.5);
  const auto rows = corollary_sweep(o.epsilon, o.eta_s, o.eta_n, ts, base);

  Table t;
  t.columns = {"T",
               "V_uncorrected",
               "T_R",
               "V_corrected",
               "V_uncorrected_poisson",
               "V_corrected_poisson",
               "V_uncorrected_single",
               "V_corrected_single"};
  for (const CorollaryRow& r : rows) {
    t.rows.push_back({r.t, r.v_uncorrected, r.t_r, r.v_corrected, r.v_uncorrected_poisson,
                      r.v_corrected_poisson, r.v_uncorrected_single, r.v_corrected_single});
  }
  t.meta["epsilon"] = o.epsilon;
  t.meta["lambda"] = epsilon_to_lambda(o.epsilon);
  return t;
}

Table cmd_counts(const Options& o) {
  const ExperimentParams p = params_for(o, single_value(o));
  const DegreeGrid g = parse_phi_grid(o.phi_grid);
  const auto [unc, cond] = fringes(p);
  const CountRecord rec_unc = simulate_counts(unc, o.rate, o.duration, o.dark_rate, o.seed);
  // Accidental coincidences are neglected: no dark counts in the coincidence record.
  const CountRecord rec_cond =
      simulate_counts(cond, o.rate, o.duration, 0.0, o.seed + kConditionalSeedOffset);
  const VisibilityEstimate est_unc = estimate_visibility(rec_unc);
  const VisibilityEstimate est_cond = estimate_visibility(rec_cond);

  Table t;
  t.columns = {"phi_deg",          "P_uncorrected", "counts_uncorrected",
               "dark_uncorrected", "P_conditional", "counts_conditional"};
  for (std::size_t i = 0; i < unc.phis.size(); ++i) {
    t.rows.push_back({g.degrees(i), unc.probabilities[i], rec_unc.counts[i],
                      rec_unc.dark_counts[i], cond.probabilities[i], rec_cond.counts[i]});
  }
  t.summary = {{"V_hat_uncorrected", est_unc.visibility},
               {"sigma_V_uncorrected", est_unc.sigma},
               {"V_hat_conditional", est_cond.visibility},
               {"sigma_V_conditional", est_cond.sigma}};
  t.meta["params"] = params_meta(p);
  t.meta["rate"] = o.rate;
  t.meta["duration"] = o.duration;
  t.meta["dark_rate"] = o.dark_rate;
  t.meta["seed"] = o.seed;
  return t;
}

Table cmd_validate(const Options& o, std::ostream& err, int& status) {
  const auto checks = run_oracle_suite(o.seed, o.draws);
  Table t;
  t.columns = {"check", "draws", "max_residual"};
  const OracleCheck* worst = nullptr;
  for (const OracleCheck& c : checks) {
    t.rows.push_back({c.name, c.draws, c.max_residual});
    if (worst == nullptr || c.max_residual > worst->max_residual) worst = &c;
  }
  t.summary = {{"max_residual", worst->max_residual}, {"worst_check", worst->name}};
  t.meta["seed"] = o.seed;
  status = kExitOk;
  if (!(worst->max_residual < kValidateThreshold)) {
    err << "validate: residual " << worst->max_residual << " in " << worst->name << " at "
        << worst->worst_case << '\n';
    status = kExitNumeric;
  }
  return t;
}

std::string format_cell(const json& cell) {
  if (cell.is_string()) return cell.get<std::string>();
  if (cell.is_boolean()) return cell.get<bool>() ? "1" : "0";
  if (cell.is_number_integer()) return cell.dump();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", cell.get<double>());
  return buf;
}

void emit(const Table& table, const Options& o, std::ostream& out) {
  const auto write = [&](std::ostream& os) {
    if (o.format == "json") {
      write_json(table, os);
    } else {
      write_csv(table, os);
    }
  };
  if (o.out.empty()) {
    write(out);
    return;
  }
  // Write beside the target and rename, so a failed run never leaves a
  // truncated file behind.
  const std::filesystem::path target(o.out);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::invalid_argument("cannot open output file " + o.out);
    write(f);
    f.flush();
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + o.out);
    }
  }
  std::filesystem::rename(tmp, target);
}

void print_summary(const Table& table, std::ostream& err) {
  for (const auto& [key, value] : table.summary.items()) {
    err << key << " = " << format_cell(value) << '\n';
  }
}

void add_options(CLI::App& app, Options& o) {
  const auto unit = CLI::Range(0.0, 1.0);
  app.add_option("--eta-s", o.eta_s, "Signal photon probability")->check(unit);
  app.add_option("--eta-n", o.eta_n,
                 "Noise photon probability (single) or per-photon transmission (spdc, poisson)")
      ->check(unit);
  o.eta_a_opt = app.add_option("--eta-a", o.eta_a, "Attenuator transmissivity [default: T]")
                    ->check(unit);
  app.add_option("--eta-d", o.eta_d, "Signal detector efficiency")->check(unit);
  app.add_option("--eta-r", o.eta_r, "Tap detector efficiency")->check(unit);
  o.t_opt = app.add_option("--t", o.t, "Noise-coupling transmissivity: x, x,y,... or start:stop:step");
  app.add_option("--t-r", o.t_r, "Tap transmissivity")->check(unit);
  app.add_option("--overlap", o.overlap, "Signal/noise mode overlap")->check(unit);
  app.add_option("--noise", o.noise, "Noise source")
      ->check(CLI::IsMember({"single", "spdc", "poisson"}));
  app.add_option("--epsilon", o.epsilon, "SPDC pair amplitude")->check(CLI::Range(0.0, 0.4));
  o.lambda_opt = app.add_option("--lambda", o.lambda,
                                "Poisson scale [default: matched to --epsilon]")
                     ->check(CLI::Range(0.0, 1.5));
  app.add_option("--phi-grid", o.phi_grid, "Phase grid in degrees, start:stop:step");
  app.add_option("--n-max", o.n_max, "Photon-number cutoff")->check(CLI::Range(1, 64));
  app.add_option("--seed", o.seed, "Random seed");
  app.add_option("--rate", o.rate, "Source rate per second")->check(CLI::NonNegativeNumber);
  app.add_option("--duration", o.duration, "Integration time per phase point, seconds")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--dark-rate", o.dark_rate, "Dark-count rate per second")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out, "Output file [default: stdout]");
  app.add_option("--tap-detector", o.tap_detector, "Tap detector model")
      ->check(CLI::IsMember({"exact", "threshold"}));
  app.add_flag("--compensate-tap", o.compensate_tap, "Mirror the tap loss in rail A");
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
    const double start = to_number(parts[0]);
    const double stop = to_number(parts[1]);
    const double step = to_number(parts[2]);
    if (!(step > 0.0) || stop < start) {
      throw std::invalid_argument("range needs step > 0 and stop >= start: " + text);
    }
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = start + static_cast<double>(i) * step;
    // Snap the last point onto stop when the grid lands on it up to rounding.
    if (std::abs(values.back() - stop) < 1e-9 * step) values.back() = stop;
    return values;
  }
  std::vector<double> values;
  for (const std::string& part : split(text, ',')) values.push_back(to_number(part));
  if (values.empty()) throw std::invalid_argument("empty value list");
  return values;
}

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    os << (i ? "," : "") << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_cell(row[i]);
    os << '\n';
  }
}

void write_json(const Table& table, std::ostream& os) {
  json doc;
  doc["columns"] = table.columns;
  doc["rows"] = table.rows;
  doc["summary"] = table.summary;
  doc["meta"] = table.meta;
  os << doc.dump(2) << '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Noise-eater interferometer simulator", "noise_eater");
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; command-line flags override it");
  app.allow_config_extras(CLI::config_extras_mode::error);

  Options o;
  add_options(app, o);

  using Command = std::function<Table(std::ostream&, int&)>;
  std::vector<std::pair<CLI::App*, Command>> commands;
  const auto simple = [&](const char* name, const char* help, Table (*fn)(const Options&)) {
    commands.emplace_back(app.add_subcommand(name, help), [fn, &o](std::ostream&, int& status) {
      status = kExitOk;
      return fn(o);
    });
  };
  simple("fringe", "Unconditional and conditional fringes for one T", cmd_fringe);
  simple("sweep", "Uncorrected and recovered visibility versus T", cmd_sweep);
  simple("optimize", "Best (eta_a, T_R) for each T", cmd_optimize);
  simple("corollary", "Multi-photon noise study with per-T tap optimisation", cmd_corollary);
  simple("counts", "Poisson count emulation and visibility estimates", cmd_counts);
  CLI::App* validate = app.add_subcommand("validate", "Simulation versus closed forms");
  validate->add_option("--draws", o.draws, "Random draws per check")
      ->check(CLI::PositiveNumber);
  commands.emplace_back(validate, [&o](std::ostream& e, int& status) {
    return cmd_validate(o, e, status);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (auto& [sub, command] : commands) {
      if (!sub->parsed()) continue;
      int status = kExitOk;
      const Table table = command(err, status);
      emit(table, o, out);
      print_summary(table, err);
      return status;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace noise_eater::cli
