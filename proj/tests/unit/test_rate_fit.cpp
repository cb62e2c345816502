#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "fracwave/error.hpp"
#include "fracwave/estimates.hpp"
#include "fracwave/rate_fit.hpp"

using namespace fracwave;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected fracwave::Error");
  return Errc::input;
}

NormSeries synthetic(std::size_t n, auto&& f) {
  NormSeries s;
  s.t = logspace(10.0, 1e5, n);
  for (double t : s.t) s.values.push_back(f(t));
  return s;
}

BoundSpec power_bound(BoundKind kind, double c, double alpha) {
  BoundSpec b;
  b.kind = kind;
  b.form = BoundForm::power;
  b.constant = c;
  b.exponent = alpha;
  return b;
}

}  // namespace

TEST_CASE("logspace hits its endpoints") {
  const auto g = logspace(1e2, 1e5, 40);
  REQUIRE(g.size() == 40);
  CHECK(g.front() == 1e2);
  CHECK(g.back() == 1e5);
  for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] / g[i - 1] == doctest::Approx(std::pow(1e3, 1.0 / 39)));
}

TEST_CASE("power-law fits recover exact exponents") {
  const auto s = synthetic(40, [](double t) { return 3.7 * std::pow(t, 0.3125); });
  const auto w = default_window(s);
  CHECK(w.lo == doctest::Approx(1e3));
  CHECK(w.hi == 1e5);
  const auto r = fit_power_exponent(s, w);
  CHECK(r.slope == doctest::Approx(0.3125).epsilon(1e-12));
  CHECK(std::exp(r.intercept) == doctest::Approx(3.7).epsilon(1e-11));
  CHECK(r.residual_rms < 1e-12);
  CHECK(r.points >= 8);

  // Invariant under scaling the data.
  auto scaled = s;
  for (auto& v : scaled.values) v *= 1e-3;
  CHECK(fit_power_exponent(scaled, w).slope == doctest::Approx(r.slope).epsilon(1e-12));

  CHECK(default_window(s, 5e3).lo == 5e3);
}

TEST_CASE("log-law fits") {
  const auto s = synthetic(30, [](double t) { return std::sqrt(2.5 * std::log(t) + 1.0); });
  const auto r = fit_log_rate(s, {10.0, 1e5});
  CHECK(r.model == RateModel::log_law);
  CHECK(r.slope == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(r.intercept == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  NormSeries early;
  early.t = logspace(0.5, 100.0, 20);
  early.values.assign(20, 1.0);
  CHECK(code_of([&] { fit_log_rate(early, {0.5, 100.0}); }) == Errc::validity);
}

TEST_CASE("fits reject unusable input") {
  const auto s = synthetic(40, [](double t) { return t; });
  CHECK(code_of([&] { fit_power_exponent(s, {5e4, 1e5}); }) == Errc::input);
  auto neg = s;
  neg.values[35] = -1.0;
  CHECK(code_of([&] { fit_power_exponent(neg, default_window(neg)); }) == Errc::input);
  NormSeries z = s;
  z.zero = true;
  std::fill(z.values.begin(), z.values.end(), 0.0);
  CHECK(code_of([&] { fit_power_exponent(z, default_window(z)); }) == Errc::input);
}

TEST_CASE("sandwich verdicts") {
  const auto s = synthetic(40, [](double t) { return 2.0 * std::pow(t, 0.25); });
  const auto lower = power_bound(BoundKind::lower, 2.0, 0.25);
  const auto upper = power_bound(BoundKind::upper, 4.0, 0.25);

  const auto r = sandwich_check(s, lower, upper);
  CHECK(r.pass);
  CHECK(r.t0_index == 0u);
  CHECK(r.pass_fraction == 1.0);
  CHECK(r.lower_monotone);

  const auto tight = sandwich_check(s, lower, power_bound(BoundKind::upper, 1.0, 0.25));
  CHECK_FALSE(tight.pass);
  REQUIRE(tight.first_violation.has_value());
  CHECK(*tight.first_violation == s.t.front());

  // Lower bound that only holds from t = 1e4 on.
  const auto late = sandwich_check(s, power_bound(BoundKind::lower, 20.0, 0.0), upper);
  CHECK(late.pass);
  REQUIRE(late.t0.has_value());
  CHECK(*late.t0 >= 1e4);
  CHECK(*late.t0 < 1.3e4);
  CHECK(*late.t0_index > 0u);
  CHECK(late.pass_fraction == 1.0);

  auto phys = upper;
  phys.level = NormLevel::physical;
  CHECK(code_of([&] { sandwich_check(s, lower, phys); }) == Errc::convention);
  CHECK(code_of([&] { sandwich_check(convert_level(s, NormLevel::physical), lower, upper); }) == Errc::convention);
}

TEST_CASE("series level conversion") {
  const auto s = synthetic(10, [](double t) { return t; });
  const auto p = convert_level(s, NormLevel::physical);
  CHECK(p.values[3] == doctest::Approx(s.values[3] / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
  CHECK(convert_level(p, NormLevel::spectral).values[3] == doctest::Approx(s.values[3]).epsilon(1e-15));
}

TEST_CASE("sampled norm curves") {
  const InitialData data{Profile{}, Profile::gaussian()};
  const auto grid = logspace(1.0, 50.0, 12);
  const auto g = sample_norm_curve(data, {1, 0.75}, grid);
  EvolveOptions q;
  q.backend = Backend::quadrature;
  const auto qs = sample_norm_curve(data, {1, 0.75}, grid, q);
  REQUIRE(g.size() == 12);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(g.values[i] > 0.0);
  CHECK(qs.values[0] == doctest::Approx(std::sqrt(6.0826091689568633)).epsilon(1e-10));

  const auto z = sample_norm_curve({Profile{}, Profile{}}, {1, 0.75}, grid, q);
  CHECK(z.zero);
  CHECK(z.values[5] == 0.0);

  const auto far = logspace(10.0, 1000.0, 5);
  CHECK(code_of([&] { sample_norm_curve(data, {1, 0.75}, far); }) == Errc::backend_cap);
  const std::vector<double> bad{1.0, 3.0, 2.0};
  CHECK(code_of([&] { sample_norm_curve(data, {1, 0.75}, bad); }) == Errc::input);
}
