#pragma once

// Initial-datum profiles on the real line.
//
// A Profile is a finite real linear combination of terms. Fourier transforms
// use the non-unitary convention  f^(xi) = \int exp(-i x xi) f(x) dx.

#include <complex>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fracwave/grid.hpp"

namespace fracwave {

/// amplitude * exp(-((x - center)/width)^2)
struct Gaussian {
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
};

/// amplitude * d/dx exp(-((x - center)/width)^2). Integrates to zero.
struct GaussianDerivative {
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
};

/// amplitude * exp(-1/(1 - (x/radius)^2)) on |x| < radius, zero outside.
/// Its transform has no closed form and is computed by quadrature.
struct CompactBump {
  double amplitude = 1.0;
  double radius = 1.0;
};

/// Point values on a GridSpec. Integrals use the rectangle rule with
/// spacing dx; off-grid values interpolate linearly and vanish outside.
struct Sampled {
  GridSpec grid;
  std::vector<double> values;
};

class Profile {
 public:
  using Term = std::variant<Gaussian, GaussianDerivative, CompactBump, Sampled>;

  Profile() = default;  // the zero profile
  Profile(Term term);   // NOLINT(google-explicit-constructor)

  static Profile gaussian(double amplitude = 1.0, double width = 1.0, double center = 0.0);
  static Profile gaussian_derivative(double amplitude = 1.0, double width = 1.0, double center = 0.0);
  static Profile compact_bump(double amplitude = 1.0, double radius = 1.0);
  static Profile sampled(GridSpec grid, std::vector<double> values);

  double operator()(double x) const;
  std::complex<double> fourier(double xi) const;

  bool is_zero() const { return terms_.empty(); }
  /// True when every term has a closed-form transform (no bumps, no samples).
  bool has_analytic_fourier() const;
  /// Grid of the first sampled term, if any.
  const GridSpec* sample_grid() const;
  std::span<const Term> terms() const { return terms_; }

  /// Radius R such that |p(x)| < rel_tol * peak for |x| > R.
  double physical_extent(double rel_tol = 1e-17) const;
  /// Frequency K such that |p^(xi)|^2 < rel_tol * peak^2 for |xi| > K.
  double spectral_extent(double rel_tol = 1e-18) const;
  /// Points where |p| or a weight may fail to be smooth (centres, bump edges, 0).
  std::vector<double> breakpoints() const;

  std::string describe() const;

  Profile& operator+=(const Profile& other);
  Profile& operator*=(double factor);
  friend Profile operator+(Profile a, const Profile& b) { return a += b; }
  friend Profile operator-(Profile a, const Profile& b) { return a += (-1.0) * b; }
  friend Profile operator*(double factor, Profile p) { return p *= factor; }

 private:
  std::vector<Term> terms_;
};

/// Integral of p over the real line; equals p.fourier(0).
double moment0(const Profile& p);
double l1_norm(const Profile& p);
double l2_norm(const Profile& p);
/// \int (1 + |x|^gamma) |p(x)| dx, gamma in [0, 1].
double weighted_l1_norm(const Profile& p, double gamma);
inline std::complex<double> fourier_at(const Profile& p, double xi) { return p.fourier(xi); }

/// Point values p(x_j) on the grid.
std::vector<double> sample(const Profile& p, const GridSpec& grid);

/// Largest |p(+-L)| relative to the sampled peak; small values mean the
/// periodic box holds the datum.
double boundary_ratio(const Profile& p, const GridSpec& grid);

/// Transform of the unit bump exp(-1/(1-x^2)) on (-1, 1); cached per argument.
double unit_bump_transform(double eta);

}  // namespace fracwave
