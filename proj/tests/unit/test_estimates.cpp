#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "../oracles/frozen_values.hpp"
#include "fracwave/error.hpp"
#include "fracwave/estimates.hpp"
#include "fracwave/lemma_oracles.hpp"

using namespace fracwave;

namespace {

const double kPi = std::numbers::pi;
const double kE = std::numbers::e;

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected fracwave::Error");
  return Errc::input;
}

}  // namespace

TEST_CASE("theta0 selection") {
  CHECK(select_theta0() == 0.99);
  CHECK(sampled_sinc_minimum(0.99) == doctest::Approx(oracle::sinc_099).epsilon(1e-12));
  CHECK(feasible_theta0_sup(0.9) == doctest::Approx(oracle::theta0_sup_09).epsilon(1e-12));
  CHECK(code_of([] { select_theta0(0.9, 0.99); }) == Errc::infeasible_threshold);
  try {
    select_theta0(0.9, 0.99);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("0.786683") != std::string::npos);
  }
  CHECK(select_theta0(0.9, 0.5) == 0.5);
}

TEST_CASE("growth envelopes evaluate to their closed forms") {
  const double P = std::sqrt(kPi);
  const auto lo = polynomial_lower_bound(P, 0.99, 0.75);
  CHECK(lo.kind == BoundKind::lower);
  CHECK(lo.exponent == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(lo.formula(1e4) == doctest::Approx(oracle::poly_lower_t1e4).epsilon(1e-13));

  const auto up = polynomial_upper_bound(2.0, 0.75);
  CHECK(up.formula(8.0) == doctest::Approx(std::sqrt(6.0) * 2.0 * 2.0).epsilon(1e-14));

  const auto llo = log_lower_bound(P);
  CHECK(llo.formula(kE) == doctest::Approx(oracle::log_lower_at_e).epsilon(1e-14));
  const auto lup = log_upper_bound(1.0);
  CHECK(lup.formula(kE * kE) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::isnan(lup.formula(1.0)));
  CHECK(code_of([&] { (void)lup(0.5); }) == Errc::validity);

  CHECK(code_of([] { polynomial_lower_bound(1.0, 0.99, 0.5); }) == Errc::wrong_regime);
  CHECK(code_of([] { polynomial_upper_bound(1.0, 1.0); }) == Errc::wrong_regime);

  auto gated = lo;
  gated.valid_from = 100.0;
  CHECK(code_of([&] { (void)gated(50.0); }) == Errc::validity);
  CHECK(gated(200.0) == gated.formula(200.0));
}

TEST_CASE("level conversion") {
  const auto up = polynomial_upper_bound(1.0, 0.75);
  const auto phys = convert_level(up, NormLevel::physical);
  CHECK(phys.level == NormLevel::physical);
  CHECK(phys.formula(10.0) == doctest::Approx(up.formula(10.0) / std::sqrt(2.0 * kPi)).epsilon(1e-15));
  const auto back = convert_level(phys, NormLevel::spectral);
  CHECK(back.formula(10.0) == doctest::Approx(up.formula(10.0)).epsilon(1e-15));
  CHECK(convert_level(up, NormLevel::spectral).constant == up.constant);
}

TEST_CASE("K1 integral") {
  CHECK(k1_log_integral(10.0) == doctest::Approx(oracle::k1_t10).epsilon(1e-9));
  CHECK(k1_log_integral(100.0) == doctest::Approx(oracle::k1_t100).epsilon(1e-9));
  CHECK(k1_log_integral(1000.0) == doctest::Approx(oracle::k1_t1000).epsilon(1e-9));
  CHECK(k1_log_integral(10000.0) == doctest::Approx(oracle::k1_t10000).epsilon(1e-9));
  for (double t : {1.5, 10.0, 1e3, 1e5, 1e6}) CHECK(k1_log_integral(t) >= k1_lower_envelope(t));
  CHECK(k1_lower_envelope(kPi / 4.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(code_of([] { k1_log_integral(1.0); }) == Errc::validity);
}

TEST_CASE("area sums") {
  const auto r = area_sums(kPi);
  CHECK(r.a.front() == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
  CHECK(r.b.front() == doctest::Approx(9.0 / 16.0).epsilon(1e-15));
  CHECK(r.b_within_2a);
  CHECK(r.total_within_3a);

  struct Case {
    double t, tail;
  };
  for (const auto& c : {Case{10.0, oracle::decay_tail_t10}, Case{1e3, oracle::decay_tail_t1e3},
                        Case{1e5, oracle::decay_tail_t1e5}}) {
    const auto rep = area_sums(c.t);
    CHECK(rep.total == doctest::Approx(c.tail).epsilon(1e-9));
    CHECK(rep.sum_A + rep.sum_B <= rep.total * (1.0 + 1e-12));
    CHECK(rep.total - rep.sum_A - rep.sum_B <= rep.tail_bound + 1e-9 * rep.total);
    CHECK(rep.b_within_2a);
    CHECK(rep.total_within_3a);
    CHECK(rep.terms == rep.A.size());
  }
  CHECK(code_of([] { area_sums(0.5); }) == Errc::validity);
  CHECK(code_of([] { area_sums(10.0, 0.0); }) == Errc::domain);
}

TEST_CASE("frequency splitting") {
  const InitialData data{Profile{}, Profile::gaussian()};
  const Parameters params{1, 0.75};
  const double t = 100.0, theta0 = 0.99;
  const auto split = fourier_split(data, params, t, theta0);
  CHECK(split.cut == doctest::Approx(theta0 * std::pow(t, -1.0 / 0.75)).epsilon(1e-15));
  CHECK(split.low + split.high == doctest::Approx(split.total).epsilon(1e-12));
  EvolveOptions q;
  q.backend = Backend::quadrature;
  const double norm = spectral_l2_norm(evolve_state(data, params, t, q));
  CHECK(split.total == doctest::Approx(norm * norm).epsilon(1e-8));
  CHECK(split.total == doctest::Approx(oracle::norm2_s075_t100).epsilon(1e-9));

  // On |xi| < cut, t|xi|^s <= theta0, so |u^|^2 >= sinc(theta0)^2 t^2 |u1^|^2.
  const double c = split.cut;
  const double sinc = std::sin(theta0) / theta0;
  CHECK(split.low >= sinc * sinc * t * t * 2.0 * c * kPi * std::exp(-c * c / 2.0));
  CHECK(split.low <= t * t * 2.0 * c * kPi);

  const auto zero = fourier_split({Profile{}, Profile{}}, params, t, theta0);
  CHECK(zero.total == 0.0);
  CHECK(code_of([&] { fourier_split(data, params, 1.0, theta0); }) == Errc::validity);
}

TEST_CASE("bounded-solution envelope") {
  BoundedNorms n;
  n.u0_l2 = 1.0;
  n.u1_l2 = 2.0;
  n.u1_l1 = 3.0;
  const auto b = bounded_upper_bound(n, 0.5);
  CHECK(b.level == NormLevel::physical);
  CHECK(b(0.0) == doctest::Approx(std::sqrt(2.0) + 2.5).epsilon(1e-15));
  CHECK(b(1e9) == b(0.0));
  CHECK(code_of([&] { bounded_upper_bound(n, 0.5, BoundedTarget::hs); }) == Errc::input);
  CHECK(code_of([&] { bounded_upper_bound(n, 0.5, BoundedTarget::l2, BoundedWeight::weighted); }) == Errc::input);
  CHECK(code_of([&] { bounded_upper_bound(n, 0.0); }) == Errc::domain);

  BoundedNorms only_u0;
  only_u0.u0_l2 = 1.0;
  only_u0.u1_l2 = 0.0;
  only_u0.u1_l1 = 0.0;
  CHECK(bounded_upper_bound(only_u0, 1.0)(5.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("constant measurement") {
  const auto g = Profile::gaussian();
  const std::vector<Profile> one{g};
  const std::vector<Profile> scaled{g, 3.0 * g, -0.25 * g};
  const FunctionalParams p{0.2, 0.0, 0.5};
  const double c1 = measure_constant(one, ConstantFunctional::riesz_l1, p);
  CHECK(std::isfinite(c1));
  CHECK(c1 == doctest::Approx(oracle::riesz_gaussian_theta02 / (kPi + std::sqrt(kPi / 2.0))).epsilon(1e-9));
  CHECK(measure_constant(scaled, ConstantFunctional::riesz_l1, p) == doctest::Approx(c1).epsilon(1e-12));

  const std::vector<Profile> mixed{g, Profile{}};
  CHECK(measure_constant(mixed, ConstantFunctional::riesz_l1, p) == doctest::Approx(c1).epsilon(1e-12));
  CHECK(code_of([] { measure_constant(std::vector<Profile>{}, ConstantFunctional::riesz_l1, {}); }) ==
        Errc::input);
  CHECK(code_of([] { measure_constant(std::vector<Profile>{Profile{}}, ConstantFunctional::riesz_l1, {}); }) ==
        Errc::input);

  const double custom = measure_constant(scaled, [](const Profile& f) { return RatioTerms{l2_norm(f), l1_norm(f)}; });
  CHECK(custom == doctest::Approx(l2_norm(g) / l1_norm(g)).epsilon(1e-12));

  // Sup envelope for a derivative datum at s = 1/2; at gamma = 0 the weighted norm is 2 ||f||_1.
  const std::vector<Profile> d{Profile::gaussian_derivative()};
  const double cs = measure_constant(d, ConstantFunctional::bounded_sup, {0.0, 0.0, 0.5});
  const double left = std::sqrt(riesz_energy(d[0], 0.5) / (2.0 * kPi));
  CHECK(cs == doctest::Approx(left / (l2_norm(d[0]) + 2.0 * l1_norm(d[0]))).epsilon(1e-12));
}
