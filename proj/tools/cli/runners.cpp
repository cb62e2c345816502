#include "runners.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>

#include <json.hpp>

#include "fracwave/error.hpp"
#include "fracwave/estimates.hpp"
#include "fracwave/lemma_oracles.hpp"
#include "fracwave/rate_fit.hpp"
#include "svg.hpp"

namespace fracwave::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
const double kRootTwoPi = std::sqrt(2.0 * std::numbers::pi);

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string brief(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Csv {
 public:
  explicit Csv(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(const std::vector<double>& values) { rows_.push_back(values); }
  void write(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::config, "cannot write " + path.string());
    for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
    out << "\n";
    for (const auto& r : rows_) {
      for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << num(r[i]);
      out << "\n";
    }
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

ordered_json report_header(const ExperimentConfig& c) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["experiment"] = c.experiment;
  j["config"] = canonical(c);
  return j;
}

void finish(const ExperimentConfig& c, ordered_json report, const RunResult& result, const Csv& csv) {
  std::filesystem::create_directories(c.output);
  csv.write(c.output / "norms.csv");
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : result.verdicts) verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  report["verdicts"] = verdicts;
  report["pass"] = result.pass();
  std::ofstream out(c.output / "report.json", std::ios::binary);
  if (!out) throw Error(Errc::config, "cannot write report.json in " + c.output.string());
  out << report.dump(2) << "\n";
}

void write_plot(const ExperimentConfig& c, const std::string& title, const std::vector<double>& x,
                const std::vector<Curve>& curves) {
  if (!c.plot) return;
  std::filesystem::create_directories(c.output);
  std::ofstream out(c.output / "plot.svg", std::ios::binary);
  out << loglog_svg(title, x, curves);
}

EvolveOptions evolve_options(const ExperimentConfig& c) {
  EvolveOptions o;
  o.backend = c.backend;
  o.grid = c.grid();
  return o;
}

ordered_json rate_json(const RateReport& r) {
  ordered_json j;
  j["model"] = r.model == RateModel::power_law ? "power-law" : r.model == RateModel::log_law ? "log-law" : "sandwich";
  j["slope"] = r.slope;
  j["intercept"] = r.intercept;
  j["residual_rms"] = r.residual_rms;
  j["r_squared"] = r.r_squared;
  j["window"] = {r.window.lo, r.window.hi};
  j["points"] = r.points;
  if (r.model == RateModel::sandwich) {
    j["pass_fraction"] = r.pass_fraction;
    j["t0"] = r.t0 ? ordered_json(*r.t0) : ordered_json(nullptr);
    j["first_violation"] = r.first_violation ? ordered_json(*r.first_violation) : ordered_json(nullptr);
    j["lower_monotone"] = r.lower_monotone;
    j["pass"] = r.pass;
  }
  return j;
}

ordered_json bound_json(const BoundSpec& b) {
  ordered_json j;
  j["label"] = b.label;
  j["kind"] = b.kind == BoundKind::lower ? "lower" : "upper";
  j["form"] = b.form == BoundForm::power ? "power" : b.form == BoundForm::sqrt_log ? "sqrt_log" : "constant";
  j["constant"] = b.constant;
  j["exponent"] = b.exponent;
  j["level"] = b.level == NormLevel::spectral ? "spectral" : "physical";
  return j;
}

ordered_json check_json(const InequalityCheck& c) {
  ordered_json j;
  j["inequality"] = c.inequality;
  j["dimension"] = c.dimension;
  j["theta"] = c.theta;
  j["gamma"] = c.gamma;
  j["profile"] = c.profile;
  j["left"] = c.left;
  j["right"] = c.right;
  j["ratio"] = c.ratio;
  j["samples"] = c.samples;
  j["passed"] = c.passed;
  j["pass"] = c.pass;
  return j;
}

bool moment_vanishes(const Profile& p) { return p.is_zero() || std::abs(moment0(p)) <= 1e-12 * std::max(1.0, l1_norm(p)); }

}  // namespace

bool RunResult::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

RunResult run_solve(const ExperimentConfig& c) {
  validate(c);
  const auto data = build_data(c);
  const auto times = c.t_grid.expand();
  const auto opt = evolve_options(c);
  std::vector<SolutionSnapshot> snaps;
  for (double t : times) snaps.push_back(evolve_state(data, c.params, t, opt));

  Csv csv({"t", "spectral_l2", "l2", "velocity_l2", "energy"});
  ordered_json report = report_header(c);
  ordered_json rows = ordered_json::array();
  ordered_json warnings = ordered_json::array();
  std::vector<double> l2s;
  for (const auto& s : snaps) {
    const double spec = spectral_l2_norm(s);
    const double vel = velocity_l2_norm(s);
    const double e = energy(s);
    csv.row({s.time(), spec, spec / kRootTwoPi, vel, e});
    rows.push_back({{"t", s.time()}, {"spectral_l2", spec}, {"l2", spec / kRootTwoPi}, {"energy", e}});
    for (const auto& w : s.warnings()) warnings.push_back(w);
    l2s.push_back(spec / kRootTwoPi);
  }
  report["rows"] = rows;
  report["warnings"] = warnings;
  RunResult result;
  finish(c, report, result, csv);
  write_plot(c, "||u(t)||_2", times, {{"l2", l2s, "#1f77b4"}});
  return result;
}

RunResult run_energy(const ExperimentConfig& c) {
  validate(c);
  const auto data = build_data(c);
  const auto times = c.t_grid.expand();
  const auto opt = evolve_options(c);
  const double e0 = energy(evolve_state(data, c.params, 0.0, opt));
  Csv csv({"t", "energy", "relative_drift"});
  ordered_json report = report_header(c);
  double worst = 0.0;
  std::vector<double> energies;
  for (double t : times) {
    const double e = energy(evolve_state(data, c.params, t, opt));
    const double drift = e0 > 0.0 ? std::abs(e - e0) / e0 : std::abs(e - e0);
    worst = std::max(worst, drift);
    csv.row({t, e, drift});
    energies.push_back(e);
  }
  report["initial_energy"] = e0;
  report["max_relative_drift"] = worst;
  RunResult result;
  result.verdicts.push_back({"energy-conservation", worst <= c.energy_tolerance,
                             "max relative drift " + brief(worst) + " vs tolerance " + brief(c.energy_tolerance)});
  finish(c, report, result, csv);
  write_plot(c, "E(t)", times, {{"energy", energies, "#1f77b4"}});
  return result;
}

RunResult run_rates(const ExperimentConfig& c) {
  validate(c);
  const auto data = build_data(c);
  const auto times = c.t_grid.expand();
  const auto series = sample_norm_curve(data, c.params, times, evolve_options(c));
  const double s = c.params.order;
  const bool zero_moment = moment_vanishes(data.u1);
  Csv csv({"t", "spectral_l2", "l2"});
  for (std::size_t i = 0; i < series.size(); ++i)
    csv.row({series.t[i], series.values[i], series.values[i] / kRootTwoPi});

  ordered_json report = report_header(c);
  RunResult result;
  const auto window = default_window(series);
  if (s == 0.5 && !zero_moment) {
    const auto fit = fit_log_rate(series, window);
    report["fit"] = rate_json(fit);
    result.verdicts.push_back({"log-linearity", fit.r_squared >= 0.99, "R^2 = " + brief(fit.r_squared)});
  } else {
    const auto fit = fit_power_exponent(series, window);
    report["fit"] = rate_json(fit);
    if (zero_moment) {
      result.verdicts.push_back({"bounded-growth", std::abs(fit.slope) <= 0.01, "alpha = " + brief(fit.slope)});
    } else if (s > 0.5 && s < 1.0) {
      const double target = 1.0 - 1.0 / (2.0 * s);
      report["target_exponent"] = target;
      result.verdicts.push_back({"growth-exponent", std::abs(fit.slope - target) <= c.rate_tolerance,
                                 "alpha = " + brief(fit.slope) + ", target " + brief(target)});
    }
  }
  finish(c, report, result, csv);
  std::vector<double> l2(series.values);
  write_plot(c, "||u^(t)||_2", times, {{"spectral_l2", l2, "#1f77b4"}});
  return result;
}

RunResult run_sandwich(const ExperimentConfig& c) {
  validate(c);
  const auto data = build_data(c);
  const double s = c.params.order;
  if (!(s >= 0.5 && s < 1.0))
    throw Error(Errc::wrong_regime, "sandwich envelopes exist for s in [1/2, 1), got s = " + brief(s));
  const double moment = moment0(data.u1);
  const double u0 = l2_norm(data.u0), u1_l1 = l1_norm(data.u1), u1_l2 = l2_norm(data.u1);
  const bool critical = s == 0.5;
  const auto lower = critical ? log_lower_bound(moment) : polynomial_lower_bound(moment, select_theta0(0.5, c.theta0), s);
  const auto upper = critical ? log_upper_bound(u0 + u1_l2 + u1_l1) : polynomial_upper_bound(u0 + u1_l1, s);

  const auto times = c.t_grid.expand();
  const auto series = sample_norm_curve(data, c.params, times, evolve_options(c));
  const auto check = sandwich_check(series, lower, upper);

  Csv csv({"t", "spectral_l2", "l2", "lower", "upper"});
  std::vector<double> lo, up;
  for (std::size_t i = 0; i < series.size(); ++i) {
    lo.push_back(lower.formula(series.t[i]));
    up.push_back(upper.formula(series.t[i]));
    csv.row({series.t[i], series.values[i], series.values[i] / kRootTwoPi, lo.back(), up.back()});
  }
  ordered_json report = report_header(c);
  report["lower"] = bound_json(lower);
  report["upper"] = bound_json(upper);
  report["sandwich"] = rate_json(check);
  RunResult result;
  result.verdicts.push_back({"sandwich", c.bounds ? check.pass : true,
                             check.t0 ? "t0 = " + brief(*check.t0) + ", pass fraction " + brief(check.pass_fraction)
                                      : std::string("lower bound never holds through the last sample")});
  if (series.size() >= 8) {
    const auto window = default_window(series, check.t0);
    if (critical) {
      const auto fit = fit_log_rate(series, window);
      report["fit"] = rate_json(fit);
    } else {
      const auto fit = fit_power_exponent(series, window);
      report["fit"] = rate_json(fit);
    }
  }
  finish(c, report, result, csv);
  write_plot(c, "||u^(t)||_2 with envelopes", times,
             {{"spectral_l2", series.values, "#1f77b4"}, {"lower", lo, "#2ca02c"}, {"upper", up, "#d62728"}});
  return result;
}

RunResult run_lemmas(const ExperimentConfig& c) {
  validate(c);
  const auto data = build_data(c);
  std::vector<Profile> family;
  if (!data.u0.is_zero()) family.push_back(data.u0);
  if (!data.u1.is_zero()) family.push_back(data.u1);
  if (family.empty()) throw Error(Errc::config, "lemmas: u0 and u1 are both zero");

  auto xi = c.xi_grid.expand();
  if (c.random_xi) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> u(std::log(1e-3), std::log(1e2));
    for (std::size_t i = 0; i < c.random_xi; ++i) xi.push_back(std::exp(u(rng)));
  }

  Csv csv({"member", "gamma", "theta", "left", "right", "ratio"});
  ordered_json checks = ordered_json::array();
  RunResult result;
  for (std::size_t m = 0; m < family.size(); ++m) {
    const auto& p = family[m];
    const double at_zero = std::abs(p.fourier(0.0));
    const double moment = std::abs(moment0(p));
    const bool equal_at_zero = std::abs(at_zero - moment) <= 1e-12 * std::max(1.0, moment);
    result.verdicts.push_back({"pointwise-equality-at-zero/" + std::to_string(m), equal_at_zero,
                               "|f^(0)| = " + brief(at_zero) + ", |P| = " + brief(moment)});
    for (double gamma : c.lemma_gammas) {
      const auto chk = check_pointwise_bound(p, gamma, xi);
      checks.push_back(check_json(chk));
      csv.row({static_cast<double>(m), gamma, 0.0, chk.left, chk.right, chk.ratio});
      result.verdicts.push_back({"pointwise/" + std::to_string(m) + "/gamma=" + brief(gamma), chk.pass,
                                 std::to_string(chk.passed) + "/" + std::to_string(chk.samples) + " samples"});
    }
    const bool zero_mean = moment_vanishes(p);
    for (double theta : c.lemma_thetas) {
      if (theta < 0.5) {
        const auto chk = check_riesz_l1(p, theta);
        checks.push_back(check_json(chk));
        csv.row({static_cast<double>(m), std::nan(""), theta, chk.left, chk.right, chk.ratio});
        result.verdicts.push_back({"riesz-l1/" + std::to_string(m) + "/theta=" + brief(theta), chk.pass,
                                   "ratio " + brief(chk.ratio)});
      }
      if (!zero_mean) continue;
      for (double gamma : c.lemma_gammas) {
        if (!(theta < gamma + 0.5)) continue;
        const auto chk = check_riesz_weighted(p, theta, gamma);
        checks.push_back(check_json(chk));
        csv.row({static_cast<double>(m), gamma, theta, chk.left, chk.right, chk.ratio});
        result.verdicts.push_back({"riesz-weighted/" + std::to_string(m) + "/theta=" + brief(theta) +
                                       "/gamma=" + brief(gamma),
                                   chk.pass, "ratio " + brief(chk.ratio)});
      }
    }
  }
  ordered_json report = report_header(c);
  report["xi_samples"] = xi.size();
  report["checks"] = checks;
  finish(c, report, result, csv);
  return result;
}

RunResult run_experiment(const ExperimentConfig& c) {
  if (c.experiment == "solve") return run_solve(c);
  if (c.experiment == "rates") return run_rates(c);
  if (c.experiment == "lemmas") return run_lemmas(c);
  if (c.experiment == "sandwich") return run_sandwich(c);
  if (c.experiment == "energy") return run_energy(c);
  throw Error(Errc::config, "experiment: unknown experiment '" + c.experiment + "'");
}

}  // namespace fracwave::cli
