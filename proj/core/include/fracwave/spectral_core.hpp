#pragma once

// Exact-in-time propagator for u_tt + (-Laplacian)^s u = 0 on the line.
//
// In frequency space the solution is
//   u^(t, xi)   = R1(t, xi) u1^(xi) + cos(t|xi|^s) u0^(xi)
//   u_t^(t, xi) = cos(t|xi|^s) u1^(xi) - |xi|^s sin(t|xi|^s) u0^(xi)
// with R1(t, xi) = sin(t|xi|^s)/|xi|^s. Two evaluation backends exist:
//   * grid: FFT of sampled data on a periodic box, multipliers applied per bin;
//   * quadrature: analytic transforms, spectral integrals by adaptive panels
//     aligned with the zeros of sin(t|xi|^s), usable at arbitrary t.
//
// "Spectral" quantities are raw L2 norms of u^ under the non-unitary
// transform; physical norms carry the Plancherel factor (2 pi)^{-1/2}.

#include <complex>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fracwave/grid.hpp"
#include "fracwave/profiles.hpp"

namespace fracwave {

enum class Backend { grid, quadrature };

/// Which Plancherel convention a norm or bound refers to: raw ||u^||_2
/// ("spectral") or ||u||_2 = (2 pi)^{-1/2} ||u^||_2 ("physical").
enum class NormLevel { spectral, physical };

inline constexpr double kGridTimeCap = 100.0;
inline constexpr double kBoundaryTolerance = 1e-14;

/// sin(t|xi|^s)/|xi|^s, with the series t(1 - (t|xi|^s)^2/6) once t|xi|^s < 1e-8.
double multiplier_r1(double s, double t, double xi);

/// Samples of a transform u^(xi_k) on the frequency bins of a GridSpec.
class SpectralField {
 public:
  SpectralField(GridSpec grid, std::vector<std::complex<double>> values);

  /// u^(xi_k) ~ dx * sum_j u(x_j) exp(-i x_j xi_k), evaluated by FFT.
  static SpectralField from_physical(const GridSpec& grid, std::span<const std::complex<double>> values);
  static SpectralField from_profile(const Profile& p, const GridSpec& grid);

  /// Inverse of from_physical.
  std::vector<std::complex<double>> to_physical() const;

  const GridSpec& grid() const { return grid_; }
  std::span<const std::complex<double>> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::complex<double> operator[](std::size_t k) const { return values_[k]; }

 private:
  GridSpec grid_;
  std::vector<std::complex<double>> values_;
};

/// Raw ||u^||_2 (bin sum with weight dxi).
double spectral_l2_norm(const SpectralField& field);
/// Physical ||u||_2 = (2 pi)^{-1/2} ||u^||_2.
double l2_norm(const SpectralField& field);
/// ||(-Laplacian)^{s/2} u||_2 = (2 pi)^{-1/2} || |xi|^s u^ ||_2. Throws Errc::domain for s < 0.
double hs_seminorm(const SpectralField& field, double s);
/// (||u||_2^2 + [u]_{H^s}^2)^{1/2}, [u]^2 = 2 C(1,s)^{-1} ||(-Laplacian)^{s/2} u||^2, s in (0, 1).
double hs_norm(const SpectralField& field, double s);

/// Same functionals for an analytic profile, by quadrature.
double hs_seminorm(const Profile& p, double s);
double hs_norm(const Profile& p, double s);

struct InitialData {
  Profile u0;
  Profile u1;
};

struct EvolveOptions {
  Backend backend = Backend::grid;
  GridSpec grid{};
};

/// Immutable solution state at time t. Cheap to copy (shared state).
class SolutionSnapshot {
 public:
  double time() const;
  const Parameters& parameters() const;
  Backend backend() const;

  /// Grid backend only: spectral fields and lazily materialised physical
  /// fields u(t, x_j), u_t(t, x_j). Throws Errc::backend_mismatch otherwise.
  const SpectralField& u_hat() const;
  const SpectralField& ut_hat() const;
  const std::vector<std::complex<double>>& u_physical() const;
  const std::vector<std::complex<double>>& ut_physical() const;

  /// Quadrature backend only: u^(t, xi) and u_t^(t, xi) at any frequency.
  std::complex<double> u_hat_at(double xi) const;
  std::complex<double> ut_hat_at(double xi) const;
  const InitialData& data() const;

  /// Non-fatal diagnostics (e.g. data not negligible at the box edge).
  std::span<const std::string> warnings() const;

  struct State;
  explicit SolutionSnapshot(std::shared_ptr<const State> state);

 private:
  std::shared_ptr<const State> state_;
};

/// Evolves (u0, u1) to time t >= 0. Throws Errc::unsupported_dimension for
/// n != 1, Errc::backend_mismatch for quadrature without analytic
/// transforms, Errc::backend_cap for grid runs past kGridTimeCap.
SolutionSnapshot evolve_state(const InitialData& data, const Parameters& params, double t,
                              const EvolveOptions& options = {});

/// Continues a snapshot by dt >= 0 (exact composition of propagators).
SolutionSnapshot evolve_state(const SolutionSnapshot& start, double dt);

/// Spectral densities integrated over frequency bands.
enum class Density {
  solution,    // |u^|^2
  velocity,    // |u_t^|^2
  fractional,  // |xi|^{2s} |u^|^2, s = snapshot order
};

/// \int_{lo <= |xi| < hi} density dxi (raw, both signs of xi).
double spectral_integral(const SolutionSnapshot& snap, Density density, double lo = 0.0,
                         double hi = std::numeric_limits<double>::infinity());

double spectral_l2_norm(const SolutionSnapshot& snap);
double l2_norm(const SolutionSnapshot& snap);
double velocity_l2_norm(const SolutionSnapshot& snap);
double hs_seminorm(const SolutionSnapshot& snap);
double hs_norm(const SolutionSnapshot& snap);

/// E(t) = 1/2 (||u_t||_2^2 + ||(-Laplacian)^{s/2} u||_2^2), physical norms.
double energy(const SolutionSnapshot& snap);

}  // namespace fracwave
