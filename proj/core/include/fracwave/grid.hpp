#pragma once

#include <cstddef>

namespace fracwave {

/// Problem parameters for u_tt + (-Laplacian)^s u = 0 in n space dimensions.
///
/// s = 1 is admitted as the classical wave equation so that d'Alembert's
/// formula can serve as a reference solution.
struct Parameters {
  int dimension = 1;
  double order = 0.5;

  /// Throws Errc::domain unless 0 < s <= 1 and n >= 1.
  void validate() const;
  /// Throws Errc::unsupported_dimension unless n == 1.
  void require_one_dimensional() const;
};

/// Uniform periodic grid on [-L, L) with N points (N a power of two).
///
/// Physical nodes x_j = -L + j dx, dx = 2L/N. Frequency bins use FFT order:
/// bin k < N/2 maps to xi = k dxi, bin k >= N/2 to (k - N) dxi, dxi = pi/L.
class GridSpec {
 public:
  static constexpr double kDefaultHalfWidth = 40.0;
  static constexpr std::size_t kDefaultPoints = 4096;

  GridSpec() : GridSpec(kDefaultHalfWidth, kDefaultPoints) {}
  GridSpec(double half_width, std::size_t points);

  double half_width() const { return half_width_; }
  std::size_t size() const { return points_; }
  double dx() const { return 2.0 * half_width_ / static_cast<double>(points_); }
  double dxi() const;
  double x(std::size_t j) const { return -half_width_ + static_cast<double>(j) * dx(); }
  double xi(std::size_t k) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  double half_width_;
  std::size_t points_;
};

}  // namespace fracwave
