#pragma once

// Numerical checks of the Riesz-potential inequalities, the pointwise
// Fourier bound |f^(xi)| <= C_gamma |xi|^gamma ||f||_{1,gamma} + |\int f|,
// and the identity between the Gagliardo double integral and the spectral
// H^s seminorm.

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "fracwave/profiles.hpp"

namespace fracwave {

/// Radially symmetric sums of Gaussians a exp(-|x|^2 / w^2) in R^n, the
/// only profiles used for n >= 2.
class RadialProfile {
 public:
  struct Term {
    double amplitude = 1.0;
    double width = 1.0;
  };

  RadialProfile(int dimension, std::vector<Term> terms);
  static RadialProfile gaussian(int dimension, double amplitude = 1.0, double width = 1.0);
  /// exp(-|x|^2) - 2^{-n} exp(-|x|^2/4): radial and of zero integral.
  static RadialProfile zero_mean_pair(int dimension);

  int dimension() const { return dimension_; }
  double value(double r) const;
  /// Transform at |xi| = r: sum a (pi w^2)^{n/2} exp(-w^2 r^2 / 4).
  double fourier(double r) const;
  double moment0() const { return fourier(0.0); }
  double l1_norm() const;
  double l2_norm() const;
  double weighted_l1_norm(double gamma) const;
  std::string describe() const;

 private:
  double radial_integral(double gamma, bool square) const;

  int dimension_;
  std::vector<Term> terms_;
};

/// Surface measure of the unit sphere in R^n.
double unit_sphere_area(int dimension);

/// \int |f^(xi)|^2 |xi|^{-2 theta} dxi. Throws Errc::divergence when three
/// successive refinements toward xi = 0 (eps = 10^{-2^k}) each grow the
/// partial integral by more than 10%.
double riesz_energy(const Profile& p, double theta);
double riesz_energy(const RadialProfile& p, double theta);

struct InequalityCheck {
  std::string inequality;
  int dimension = 1;
  double theta = 0.0;
  double gamma = 0.0;
  std::string profile;
  double left = 0.0;
  double right = 0.0;
  double ratio = 0.0;
  double declared_constant = std::numeric_limits<double>::infinity();
  std::size_t samples = 1;
  std::size_t passed = 0;
  bool pass = false;
};

/// ratio = riesz_energy / (||f||_1^2 + ||f||_2^2); theta in [0, n/2).
InequalityCheck check_riesz_l1(const Profile& p, double theta,
                           double declared_constant = std::numeric_limits<double>::infinity());
InequalityCheck check_riesz_l1(const RadialProfile& p, double theta,
                           double declared_constant = std::numeric_limits<double>::infinity());

/// ratio = riesz_energy / (||f||_{1,gamma}^2 + ||f||_2^2); needs \int f = 0,
/// gamma in [0, 1], theta in [0, gamma + n/2).
InequalityCheck check_riesz_weighted(const Profile& p, double theta, double gamma,
                           double declared_constant = std::numeric_limits<double>::infinity());
InequalityCheck check_riesz_weighted(const RadialProfile& p, double theta, double gamma,
                           double declared_constant = std::numeric_limits<double>::infinity());

/// Pointwise Fourier bound with C_gamma = 2 at every frequency in xi_grid.
/// ratio holds the empirical sup of (|f^(xi)| - |P|) / (|xi|^gamma ||f||_{1,gamma}).
InequalityCheck check_pointwise_bound(const Profile& p, double gamma, std::span<const double> xi_grid);

inline constexpr double kPointwiseConstant = 2.0;

/// [u]_{H^s} = ( \int\int |u(x) - u(y)|^2 / |x - y|^{1+2s} dx dy )^{1/2}, s in (0, 1).
double gagliardo_seminorm(const Profile& p, double s);
/// C(1, s).
double compute_C1s(double s);

}  // namespace fracwave
