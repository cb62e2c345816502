#include "fracwave/rate_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fracwave/error.hpp"
#include "fracwave/parallel.hpp"

namespace fracwave {
namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
  double r2 = 0.0;
};

LineFit least_squares(std::span<const double> x, std::span<const double> y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  f.r2 = syy > 0.0 ? 1.0 - ss / syy : 1.0;
  return f;
}

std::vector<std::size_t> window_indices(const NormSeries& series, const FitWindow& w) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < series.size(); ++i)
    if (series.t[i] >= w.lo && series.t[i] <= w.hi) idx.push_back(i);
  return idx;
}

void check_series(const NormSeries& s) {
  if (s.t.size() != s.values.size()) throw Error(Errc::input, "series time and value lengths differ");
  for (std::size_t i = 1; i < s.t.size(); ++i)
    if (!(s.t[i] > s.t[i - 1])) throw Error(Errc::input, "series times must be strictly increasing");
}

}  // namespace

std::vector<double> logspace(double a, double b, std::size_t n) {
  if (!(a > 0.0 && b > 0.0)) throw Error(Errc::domain, "logspace needs positive endpoints");
  if (n == 0) return {};
  if (n == 1) return {a};
  std::vector<double> out(n);
  const double la = std::log10(a), lb = std::log10(b);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::pow(10.0, la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1));
  out.front() = a;
  out.back() = b;
  return out;
}

NormSeries sample_norm_curve(const InitialData& data, const Parameters& params, std::span<const double> t_grid,
                             const EvolveOptions& options) {
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] > 0.0)) throw Error(Errc::input, "t grid must be positive");
    if (i && !(t_grid[i] > t_grid[i - 1])) throw Error(Errc::input, "t grid must be strictly increasing");
  }
  if (options.backend == Backend::grid && !t_grid.empty() && t_grid.back() > kGridTimeCap) {
    std::ostringstream os;
    os << "grid backend is capped at t = " << kGridTimeCap << " but the t grid reaches " << t_grid.back()
       << "; use the quadrature backend";
    throw Error(Errc::backend_cap, os.str());
  }
  NormSeries s;
  s.t.assign(t_grid.begin(), t_grid.end());
  s.values.assign(t_grid.size(), 0.0);
  s.level = NormLevel::spectral;
  std::ostringstream prov;
  prov.precision(17);
  prov << (options.backend == Backend::grid ? "grid" : "quadrature") << "; s=" << params.order
       << "; u0=" << data.u0.describe() << "; u1=" << data.u1.describe();
  s.provenance = prov.str();
  if (data.u0.is_zero() && data.u1.is_zero()) {
    s.zero = true;
    return s;
  }
  parallel_for(t_grid.size(), [&](std::size_t i) {
    s.values[i] = spectral_l2_norm(evolve_state(data, params, t_grid[i], options));
  });
  return s;
}

NormSeries convert_level(const NormSeries& series, NormLevel level) {
  if (series.level == level) return series;
  NormSeries out = series;
  const double factor = std::sqrt(2.0 * std::numbers::pi);
  for (auto& v : out.values) v = level == NormLevel::physical ? v / factor : v * factor;
  out.level = level;
  return out;
}

FitWindow default_window(const NormSeries& series, std::optional<double> t0) {
  if (series.t.empty()) throw Error(Errc::input, "empty series");
  FitWindow w;
  w.hi = series.t.back();
  w.lo = std::max(w.hi / 100.0, t0.value_or(0.0));
  return w;
}

RateReport fit_power_exponent(const NormSeries& series, const FitWindow& window) {
  check_series(series);
  if (series.zero) throw Error(Errc::input, "cannot fit a growth law to a zero series");
  const auto idx = window_indices(series, window);
  if (idx.size() < 8) throw Error(Errc::input, "power-law fit needs at least 8 points in the window");
  std::vector<double> x, y;
  for (auto i : idx) {
    if (!(series.values[i] > 0.0)) throw Error(Errc::input, "power-law fit needs positive values");
    x.push_back(std::log(series.t[i]));
    y.push_back(std::log(series.values[i]));
  }
  const auto f = least_squares(x, y);
  RateReport r;
  r.model = RateModel::power_law;
  r.slope = f.slope;
  r.intercept = f.intercept;
  r.residual_rms = f.rms;
  r.r_squared = f.r2;
  r.window = window;
  r.points = idx.size();
  return r;
}

RateReport fit_log_rate(const NormSeries& series, const FitWindow& window) {
  check_series(series);
  if (series.zero) throw Error(Errc::input, "cannot fit a growth law to a zero series");
  const auto idx = window_indices(series, window);
  if (idx.size() < 8) throw Error(Errc::input, "log-law fit needs at least 8 points in the window");
  std::vector<double> x, y;
  for (auto i : idx) {
    if (!(series.values[i] > 0.0)) throw Error(Errc::input, "log-law fit needs positive values");
    if (!(series.t[i] > 1.0)) throw Error(Errc::validity, "log-law fit needs t > 1 throughout the window");
    x.push_back(std::log(series.t[i]));
    y.push_back(series.values[i] * series.values[i]);
  }
  const auto f = least_squares(x, y);
  RateReport r;
  r.model = RateModel::log_law;
  r.slope = f.slope;
  r.intercept = f.intercept;
  r.residual_rms = f.rms;
  r.r_squared = f.r2;
  r.window = window;
  r.points = idx.size();
  return r;
}

RateReport sandwich_check(const NormSeries& series, const BoundSpec& lower, const BoundSpec& upper) {
  check_series(series);
  if (lower.level != series.level || upper.level != series.level)
    throw Error(Errc::convention, "bound and series refer to different Plancherel levels");
  constexpr double slack = 1e-12;
  const std::size_t n = series.size();
  std::vector<char> lo_ok(n), up_ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = series.values[i];
    const double l = lower.formula(series.t[i]);
    const double u = upper.formula(series.t[i]);
    lo_ok[i] = v >= l * (1.0 - slack);
    up_ok[i] = v <= u * (1.0 + slack);
  }
  RateReport r;
  r.model = RateModel::sandwich;
  r.points = n;
  if (n) r.window = {series.t.front(), series.t.back()};

  std::optional<std::size_t> start;
  for (std::size_t i = n; i-- > 0;) {
    if (!lo_ok[i]) break;
    start = i;
  }
  if (!start) {
    r.pass = false;
    for (std::size_t i = 0; i < n; ++i)
      if (!lo_ok[i] || !up_ok[i]) {
        r.first_violation = series.t[i];
        break;
      }
    return r;
  }
  r.t0_index = start;
  r.t0 = series.t[*start];
  // Validity is monotone when the lower bound never held before t0.
  for (std::size_t i = 0; i < *start; ++i)
    if (lo_ok[i]) r.lower_monotone = false;
  std::size_t good = 0;
  for (std::size_t i = *start; i < n; ++i) {
    if (lo_ok[i] && up_ok[i]) {
      ++good;
    } else if (!r.first_violation) {
      r.first_violation = series.t[i];
    }
  }
  r.pass_fraction = static_cast<double>(good) / static_cast<double>(n - *start);
  r.pass = good == n - *start;
  return r;
}

}  // namespace fracwave
