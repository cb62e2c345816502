#include "fracwave/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fracwave/error.hpp"

namespace fracwave {

void Parameters::validate() const {
  if (dimension < 1) throw Error(Errc::domain, "dimension must be >= 1, got " + std::to_string(dimension));
  if (!(order > 0.0 && order <= 1.0))
    throw Error(Errc::domain, "order s must lie in (0, 1], got " + std::to_string(order));
}

void Parameters::require_one_dimensional() const {
  validate();
  if (dimension != 1)
    throw Error(Errc::unsupported_dimension,
                "numeric evolution supports n = 1 only, got n = " + std::to_string(dimension));
}

GridSpec::GridSpec(double half_width, std::size_t points) : half_width_(half_width), points_(points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw Error(Errc::domain, "grid half-width must be positive");
  if (points < 2 || (points & (points - 1)) != 0)
    throw Error(Errc::domain, "grid size must be a power of two >= 2, got " + std::to_string(points));
}

double GridSpec::dxi() const { return std::numbers::pi / half_width_; }

double GridSpec::xi(std::size_t k) const {
  const auto n = static_cast<long long>(points_);
  auto signed_k = static_cast<long long>(k);
  if (signed_k >= n / 2) signed_k -= n;
  return static_cast<double>(signed_k) * dxi();
}

}  // namespace fracwave
