#pragma once

// Closed-form growth envelopes for ||u^(t)||_2, the frequency splitting used
// to derive them, and the auxiliary integrals of the critical case s = 1/2.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracwave/profiles.hpp"
#include "fracwave/quadrature.hpp"
#include "fracwave/spectral_core.hpp"

namespace fracwave {

enum class BoundKind { lower, upper };
enum class BoundForm {
  power,     // C t^alpha
  sqrt_log,  // C sqrt(log t)
  constant,  // C
};

struct BoundSpec {
  BoundKind kind = BoundKind::upper;
  BoundForm form = BoundForm::constant;
  double constant = 0.0;
  double exponent = 0.0;
  /// Start of validity; empty until determined by a scan.
  std::optional<double> valid_from;
  NormLevel level = NormLevel::spectral;
  std::string label;

  /// The formula itself, without validity checks (NaN for log forms at t <= 1).
  double formula(double t) const;
  /// Checked evaluation: Errc::validity below valid_from, or t <= 1 for log forms.
  double operator()(double t) const;
};

/// Rescales a bound to the other Plancherel convention: ||u||_2 = (2 pi)^{-1/2} ||u^||_2.
BoundSpec convert_level(const BoundSpec& bound, NormLevel level);

/// Largest splitting constant theta0 <= requested (< 1) with sin(theta)/theta >= threshold
/// on (0, theta0], checked by dense sampling. Errc::infeasible_threshold if the
/// requested value fails; the message carries feasible_theta0_sup(threshold).
double select_theta0(double threshold = 0.5, double requested = 0.99);
/// Solution of sin(theta)/theta = threshold on (0, pi).
double feasible_theta0_sup(double threshold);
/// min of sin(theta)/theta over a dense sample of (0, theta0].
double sampled_sinc_minimum(double theta0, std::size_t samples = 100000);

struct SplitReport {
  double t = 0.0;
  double theta0 = 0.0;
  double cut = 0.0;  // theta0 t^{-1/s}
  double low = 0.0;
  double high = 0.0;
  double total = 0.0;
};

/// ||u^(t)||_2^2 split at |xi| = theta0 t^{-1/s} (quadrature backend). Needs t > 1.
SplitReport fourier_split(const InitialData& data, const Parameters& params, double t, double theta0);

/// (theta0/4)|P| t^{1-1/(2s)}, s in (1/2, 1).
BoundSpec polynomial_lower_bound(double moment, double theta0, double s);
/// sqrt(4s/(2s-1)) M1 t^{1-1/(2s)}, M1 = ||u0||_2 + ||u1||_1.
BoundSpec polynomial_upper_bound(double m1, double s);
/// (|P|/(3e)) sqrt(log t), equivalently ||u^||^2 >= P^2 log t / (9 e^2).
BoundSpec log_lower_bound(double moment);
/// 2 M2 sqrt(log t), M2 = ||u0||_2 + ||u1||_2 + ||u1||_1.
BoundSpec log_upper_bound(double m2);

/// K1(t) = 2 \int_0^inf exp(-r^2) r^{-1} sin^2(t sqrt r) dr, t > 1.
/// Errc::numerical_failure if the relative error estimate exceeds 1e-6.
quad::Result k1_log_integral_result(double t);
double k1_log_integral(double t);
/// (2/(3e)) (log t + log 4 - log pi), the lower envelope for K1.
double k1_lower_envelope(double t);

struct AreaSumReport {
  double t = 0.0;
  double tolerance = 0.0;
  std::vector<double> a, b;     // a_i = ((1/4 + i) pi/t)^2, b_i = ((3/4 + i) pi/t)^2
  std::vector<double> A, B;     // \int_{a_i}^{b_i}, \int_{b_i}^{a_{i+1}} of exp(-r^2)/r
  std::size_t terms = 0;        // truncation index
  double tail_bound = 0.0;      // bound on \int_{a_terms}^inf exp(-r^2)/r dr
  double sum_A = 0.0;
  double sum_B = 0.0;
  double total = 0.0;           // \int_{a_0}^inf exp(-r^2)/r dr
  double max_B_over_A = 0.0;
  bool b_within_2a = false;     // B_i <= 2 A_i for every i
  bool total_within_3a = false; // total <= 3 sum_A
};

/// Needs t > pi/4 and tolerance > 0. Stops once the tail bound
/// exp(-a^2)/(2 a^2) drops below tolerance * sum_A.
AreaSumReport area_sums(double t, double tolerance = 1e-10);

/// Norms entering the bounded-solution estimate. Which ones are required
/// depends on the target and weight.
struct BoundedNorms {
  std::optional<double> u0_l2;
  std::optional<double> u0_hs;
  std::optional<double> u1_l2;
  std::optional<double> u1_l1;
  std::optional<double> u1_weighted;  // ||u1||_{1,gamma}
};

enum class BoundedTarget { l2, hs };
enum class BoundedWeight { l1, weighted };

/// sqrt(2) ||u0|| + C (||u1||_2 + ||u1||_1 or ||u1||_{1,gamma}), valid for all t >= 0,
/// physical level. ||u0|| is the L2 or H^s norm according to target.
/// Errc::input when a required norm is missing, Errc::domain for C <= 0.
BoundSpec bounded_upper_bound(const BoundedNorms& norms, double constant,
                              BoundedTarget target = BoundedTarget::l2,
                              BoundedWeight weight = BoundedWeight::l1);

struct RatioTerms {
  double left = 0.0;
  double right = 0.0;
};

/// max over the family of left/right. 0/0 members are skipped; an empty or
/// entirely degenerate family raises Errc::input.
double measure_constant(std::span<const Profile> family,
                        const std::function<RatioTerms(const Profile&)>& functional);

enum class ConstantFunctional {
  riesz_l1,        // \int |f^|^2 |xi|^{-2 theta} / (||f||_1^2 + ||f||_2^2)
  riesz_weighted,  // same over (||f||_{1,gamma}^2 + ||f||_2^2)
  bounded_sup,     // sup_t ||u(t)||_2 / (||u1||_2 + ||u1||_{1,gamma}), u0 = 0, order s
};

struct FunctionalParams {
  double theta = 0.0;
  double gamma = 0.0;
  double order = 0.5;
};

double measure_constant(std::span<const Profile> family, ConstantFunctional which,
                        const FunctionalParams& params);

}  // namespace fracwave
