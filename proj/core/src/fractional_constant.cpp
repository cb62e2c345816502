#include "fracwave/fractional_constant.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "fracwave/error.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {

double fractional_laplacian_constant(double s) {
  if (!(s > 0.0 && s < 1.0)) throw Error(Errc::domain, "C(1,s) needs s in (0, 1)");
  constexpr double two_pi = 2.0 * std::numbers::pi;
  constexpr int periods = 64;
  const double a = 1.0 + 2.0 * s;

  quad::Options opt;
  opt.rel_tol = 1e-13;

  // [0, 1]: (1 - cos z) z^{-1-2s} = g(z) z^{1-2s} with g(z) = 2 sin^2(z/2)/z^2.
  // Substituting z = v^p, p = 1/(2 - 2s), removes the algebraic factor.
  const double p = 1.0 / (2.0 - 2.0 * s);
  auto head = [p](double v) {
    const double z = std::pow(v, p);
    if (z == 0.0) return 0.5 * p;
    const double h = std::sin(0.5 * z);
    return p * 2.0 * h * h / (z * z);
  };
  double total = quad::integrate(head, 0.0, 1.0, opt).value;

  // [1, X] with X = 2 pi * periods, panels at multiples of 2 pi.
  const double x_end = two_pi * periods;
  std::vector<double> breaks{1.0};
  for (int k = 1; k <= periods; ++k) breaks.push_back(two_pi * k);
  auto body = [a](double z) {
    const double h = std::sin(0.5 * z);
    return 2.0 * h * h * std::pow(z, -a);
  };
  total += quad::integrate_panels(body, breaks, opt).value;

  // [X, inf): \int z^{-a} - \int cos(z) z^{-a}. With sin X = 0, cos X = 1,
  // repeated integration by parts gives
  // \int_X^inf cos(z) z^{-b} dz = b X^{-b-1} - b(b+1) \int_X^inf cos(z) z^{-b-2} dz.
  double cos_tail = 0.0;
  double coeff = 1.0;
  double b = a;
  for (int term = 0; term < 4; ++term) {
    cos_tail += coeff * b * std::pow(x_end, -b - 1.0);
    coeff *= -b * (b + 1.0);
    b += 2.0;
  }
  total += std::pow(x_end, 1.0 - a) / (a - 1.0) - cos_tail;

  return 1.0 / (2.0 * total);
}

}  // namespace fracwave
