#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "../common/random_profiles.hpp"
#include "../oracles/frozen_values.hpp"
#include "fracwave/error.hpp"
#include "fracwave/estimates.hpp"
#include "fracwave/fractional_constant.hpp"
#include "fracwave/lemma_oracles.hpp"
#include "fracwave/spectral_core.hpp"

using namespace fracwave;

namespace {

const double kPi = std::numbers::pi;

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

TEST_CASE("Riesz energies match closed forms") {
  CHECK(riesz_energy(Profile::gaussian(), 0.2) == doctest::Approx(oracle::riesz_gaussian_theta02).epsilon(1e-10));
  CHECK(riesz_energy(Profile::gaussian(), 0.4) == doctest::Approx(oracle::riesz_gaussian_theta04).epsilon(1e-10));
  CHECK(riesz_energy(Profile::gaussian_derivative(), 0.9) ==
        doctest::Approx(oracle::riesz_gaussian_derivative_theta09).epsilon(1e-10));
  CHECK(riesz_energy(RadialProfile::gaussian(2), 0.9) ==
        doctest::Approx(oracle::riesz_radial_gaussian_n2_theta09).epsilon(1e-9));
  CHECK(riesz_energy(RadialProfile::gaussian(3), 1.2) ==
        doctest::Approx(oracle::riesz_radial_gaussian_n3_theta12).epsilon(1e-9));
  // theta = 0 is Plancherel.
  const auto g = Profile::gaussian(1.0, 1.0, 0.4);
  CHECK(riesz_energy(g, 0.0) == doctest::Approx(2.0 * kPi * std::pow(l2_norm(g), 2)).epsilon(1e-11));
  // Slowly decaying transform computed by quadrature; its tail sits at the rounding floor.
  const auto b = Profile::compact_bump(1.0, 0.5) + Profile::gaussian();
  CHECK(riesz_energy(b, 0.0) == doctest::Approx(2.0 * kPi * std::pow(l2_norm(b), 2)).epsilon(1e-9));
  CHECK(riesz_energy(b, 0.3) > riesz_energy(b, 0.1));
}

TEST_CASE("divergent Riesz integrals are reported") {
  CHECK(code_of([] { riesz_energy(Profile::gaussian(), 0.5); }) == Errc::divergence);
  CHECK(code_of([] { riesz_energy(Profile::gaussian(), 0.7); }) == Errc::divergence);
  CHECK(code_of([] { riesz_energy(Profile::gaussian_derivative(), 1.5); }) == Errc::divergence);
  CHECK(code_of([] { riesz_energy(RadialProfile::gaussian(2), 1.0); }) == Errc::divergence);
  CHECK(std::isfinite(riesz_energy(RadialProfile::zero_mean_pair(2), 1.5)));
  CHECK(code_of([] { riesz_energy(Profile::gaussian(), -0.1); }) == Errc::domain);
}

TEST_CASE("radial profiles") {
  CHECK(unit_sphere_area(1) == doctest::Approx(2.0));
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  const auto g3 = RadialProfile::gaussian(3);
  CHECK(g3.moment0() == doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-15));
  CHECK(g3.l1_norm() == doctest::Approx(std::pow(kPi, 1.5)).epsilon(1e-10));
  CHECK(g3.l2_norm() == doctest::Approx(std::pow(kPi / 2.0, 0.75)).epsilon(1e-10));
  const auto pair = RadialProfile::zero_mean_pair(2);
  CHECK(std::abs(pair.moment0()) < 1e-15);
  CHECK(code_of([] { RadialProfile(0, {{1.0, 1.0}}); }) == Errc::domain);
}

TEST_CASE("inequality checks enforce their hypotheses") {
  const auto g = Profile::gaussian();
  const auto d = Profile::gaussian_derivative();
  CHECK(code_of([&] { check_riesz_l1(g, 0.5); }) == Errc::precondition);
  CHECK(code_of([&] { check_riesz_weighted(g, 0.3, 0.5); }) == Errc::precondition);
  CHECK(code_of([&] { check_riesz_weighted(d, 1.0, 0.5); }) == Errc::precondition);
  CHECK(code_of([&] { check_riesz_weighted(d, 0.3, 1.5); }) == Errc::precondition);
  CHECK(code_of([&] { check_riesz_l1(RadialProfile::gaussian(3), 1.5); }) == Errc::precondition);

  const auto c1 = check_riesz_l1(g, 0.2);
  CHECK(c1.pass);
  CHECK(c1.ratio == doctest::Approx(oracle::riesz_gaussian_theta02 / (kPi + std::sqrt(kPi / 2.0))).epsilon(1e-9));
  CHECK_FALSE(check_riesz_l1(g, 0.2, 0.5 * c1.ratio).pass);
  const auto c2 = check_riesz_weighted(d, 0.9, 0.5);
  CHECK(c2.pass);
  CHECK(std::isfinite(c2.ratio));
  CHECK(check_riesz_weighted(RadialProfile::zero_mean_pair(3), 1.6, 0.5).pass);
}

TEST_CASE("pointwise Fourier bound") {
  std::vector<double> xi;
  for (int k = -300; k <= 200; ++k) xi.push_back(std::pow(10.0, k / 100.0));
  xi.push_back(0.0);
  fracwave::testing::ProfileGenerator gen(11);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.profile();
    for (double gamma : {0.0, 0.25, 0.5, 1.0}) {
      const auto c = check_pointwise_bound(p, gamma, xi);
      CHECK(c.pass);
      CHECK(c.passed == c.samples);
      CHECK(c.ratio <= kPointwiseConstant);
    }
  }
  CHECK(code_of([] {
          const std::vector<double> x{1.0};
          check_pointwise_bound(Profile::gaussian(), 1.5, x);
        }) == Errc::domain);
}

TEST_CASE("Gagliardo seminorm and its spectral identity") {
  const auto g = Profile::gaussian();
  CHECK(gagliardo_seminorm(g, 0.3) == doctest::Approx(oracle::gagliardo_gaussian_03).epsilon(1e-7));
  CHECK(gagliardo_seminorm(g, 0.5) == doctest::Approx(oracle::gagliardo_gaussian_05).epsilon(1e-7));
  CHECK(gagliardo_seminorm(g, 0.7) == doctest::Approx(oracle::gagliardo_gaussian_07).epsilon(1e-7));

  CHECK(compute_C1s(0.3) == doctest::Approx(oracle::c1s_03).epsilon(1e-13));
  CHECK(compute_C1s(0.5) == doctest::Approx(oracle::c1s_05).epsilon(1e-13));
  CHECK(compute_C1s(0.7) == doctest::Approx(oracle::c1s_07).epsilon(1e-13));

  // [u]^2 = 2 C(1,s)^{-1} ||(-Laplacian)^{s/2} u||^2 on shifted, mixed data.
  const auto p = Profile::gaussian(1.0, 1.3, 0.5) - Profile::gaussian_derivative(0.4, 0.8, -1.0);
  for (double s : {0.25, 0.6, 0.8}) {
    const double lhs = std::pow(gagliardo_seminorm(p, s), 2);
    const double rhs = 2.0 / compute_C1s(s) * std::pow(hs_seminorm(p, s), 2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-7));
  }
  CHECK(code_of([&] { gagliardo_seminorm(g, 1.0); }) == Errc::domain);
  CHECK(code_of([] { compute_C1s(0.0); }) == Errc::domain);
}
