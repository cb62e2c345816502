#pragma once

// Reproducible random initial data for property tests.

#include <cstdint>
#include <random>

#include "fracwave/profiles.hpp"
#include "fracwave/spectral_core.hpp"

namespace fracwave::testing {

class ProfileGenerator {
 public:
  explicit ProfileGenerator(std::uint64_t seed) : rng_(seed) {}

  /// One to three Gaussian or Gaussian-derivative terms, centred in [-3, 3].
  Profile profile() {
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_real_distribution<double> amp(-2.0, 2.0), width(0.5, 2.0), centre(-3.0, 3.0);
    Profile p;
    const int n = count(rng_);
    for (int i = 0; i < n; ++i) {
      const double a = amp(rng_), w = width(rng_), c = centre(rng_);
      p += kind(rng_) == 0 ? Profile::gaussian(a, w, c) : Profile::gaussian_derivative(a, w, c);
    }
    return p;
  }

  InitialData data() {
    Profile u0 = profile();
    Profile u1 = profile();
    return {u0, u1};
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace fracwave::testing
