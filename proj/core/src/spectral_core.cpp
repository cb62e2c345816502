#include "fracwave/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <optional>

#include "fracwave/error.hpp"
#include "fracwave/fft.hpp"
#include "fracwave/fractional_constant.hpp"
#include "fracwave/quadrature.hpp"

namespace fracwave {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |xi|^s with the common orders special-cased.
inline double abs_power(double xi, double s) {
  const double a = std::abs(xi);
  if (s == 1.0) return a;
  if (s == 0.5) return std::sqrt(a);
  return a == 0.0 ? 0.0 : std::pow(a, s);
}

struct Multipliers {
  double cos_phase;
  double r1;         // sin(phase)/rho
  double rho_sin;    // rho sin(phase)
};

inline Multipliers multipliers(double s, double t, double xi) {
  const double rho = abs_power(xi, s);
  const double phase = t * rho;
  if (phase < 1e-8) return {std::cos(phase), t * (1.0 - phase * phase / 6.0), rho * std::sin(phase)};
  const double sn = std::sin(phase);
  return {std::cos(phase), sn / rho, rho * sn};
}

void check_order(double s) {
  if (!(s >= 0.0)) throw Error(Errc::domain, "order s must be nonnegative");
}

}  // namespace

double multiplier_r1(double s, double t, double xi) { return multipliers(s, t, xi).r1; }

// ---------------------------------------------------------------------------
// SpectralField

SpectralField::SpectralField(GridSpec grid, std::vector<std::complex<double>> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw Error(Errc::input, "spectral field length does not match grid");
}

SpectralField SpectralField::from_physical(const GridSpec& grid, std::span<const std::complex<double>> values) {
  if (values.size() != grid.size()) throw Error(Errc::input, "physical field length does not match grid");
  std::vector<std::complex<double>> buf(values.begin(), values.end());
  fft::forward(buf);
  // x_j = -L + j dx gives the phase exp(i L xi_k) = (-1)^k.
  const double dx = grid.dx();
  for (std::size_t k = 0; k < buf.size(); ++k) buf[k] *= (k % 2 == 0 ? dx : -dx);
  return SpectralField(grid, std::move(buf));
}

SpectralField SpectralField::from_profile(const Profile& p, const GridSpec& grid) {
  const auto samples = sample(p, grid);
  std::vector<std::complex<double>> values(samples.begin(), samples.end());
  return from_physical(grid, values);
}

std::vector<std::complex<double>> SpectralField::to_physical() const {
  std::vector<std::complex<double>> buf(values_);
  const double scale = 1.0 / (static_cast<double>(grid_.size()) * grid_.dx());
  for (std::size_t k = 0; k < buf.size(); ++k) buf[k] *= (k % 2 == 0 ? scale : -scale);
  fft::backward(buf);
  return buf;
}

namespace {

template <class Weight>
double weighted_bin_sum(const SpectralField& field, Weight w) {
  double acc = 0.0;
  const auto& g = field.grid();
  for (std::size_t k = 0; k < field.size(); ++k) acc += w(g.xi(k)) * std::norm(field[k]);
  return acc * g.dxi();
}

}  // namespace

double spectral_l2_norm(const SpectralField& field) {
  return std::sqrt(weighted_bin_sum(field, [](double) { return 1.0; }));
}

double l2_norm(const SpectralField& field) { return spectral_l2_norm(field) / std::sqrt(kTwoPi); }

double hs_seminorm(const SpectralField& field, double s) {
  check_order(s);
  return std::sqrt(weighted_bin_sum(field, [s](double xi) {
                     const double r = abs_power(xi, s);
                     return r * r;
                   }) /
                   kTwoPi);
}

double hs_norm(const SpectralField& field, double s) {
  const double l2 = l2_norm(field);
  const double semi = hs_seminorm(field, s);
  return std::sqrt(l2 * l2 + 2.0 / fractional_laplacian_constant(s) * semi * semi);
}

double hs_seminorm(const Profile& p, double s) {
  check_order(s);
  if (p.is_zero()) return 0.0;
  const double extent = p.spectral_extent();
  std::vector<double> breaks;
  const int panels = 64;
  for (int i = 0; i <= panels; ++i) breaks.push_back(extent * i / panels);
  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-300;
  auto density = [&](double xi) {
    const double r = abs_power(xi, s);
    return r * r * (std::norm(p.fourier(xi)) + std::norm(p.fourier(-xi)));
  };
  return std::sqrt(quad::integrate_panels(density, breaks, opt).value / kTwoPi);
}

double hs_norm(const Profile& p, double s) {
  const double l2 = l2_norm(p);
  const double semi = hs_seminorm(p, s);
  return std::sqrt(l2 * l2 + 2.0 / fractional_laplacian_constant(s) * semi * semi);
}

// ---------------------------------------------------------------------------
// SolutionSnapshot

struct SolutionSnapshot::State {
  Parameters params;
  double t = 0.0;
  Backend backend = Backend::grid;
  InitialData data;
  std::optional<SpectralField> u_hat;
  std::optional<SpectralField> ut_hat;
  std::vector<std::string> warnings;

  mutable std::once_flag u_once;
  mutable std::once_flag ut_once;
  mutable std::vector<std::complex<double>> u_phys;
  mutable std::vector<std::complex<double>> ut_phys;
};

SolutionSnapshot::SolutionSnapshot(std::shared_ptr<const State> state) : state_(std::move(state)) {}

double SolutionSnapshot::time() const { return state_->t; }
const Parameters& SolutionSnapshot::parameters() const { return state_->params; }
Backend SolutionSnapshot::backend() const { return state_->backend; }
std::span<const std::string> SolutionSnapshot::warnings() const { return state_->warnings; }

const SpectralField& SolutionSnapshot::u_hat() const {
  if (!state_->u_hat) throw Error(Errc::backend_mismatch, "spectral grid fields exist only for the grid backend");
  return *state_->u_hat;
}

const SpectralField& SolutionSnapshot::ut_hat() const {
  if (!state_->ut_hat) throw Error(Errc::backend_mismatch, "spectral grid fields exist only for the grid backend");
  return *state_->ut_hat;
}

const std::vector<std::complex<double>>& SolutionSnapshot::u_physical() const {
  const auto& field = u_hat();
  std::call_once(state_->u_once, [&] { state_->u_phys = field.to_physical(); });
  return state_->u_phys;
}

const std::vector<std::complex<double>>& SolutionSnapshot::ut_physical() const {
  const auto& field = ut_hat();
  std::call_once(state_->ut_once, [&] { state_->ut_phys = field.to_physical(); });
  return state_->ut_phys;
}

const InitialData& SolutionSnapshot::data() const {
  if (state_->backend != Backend::quadrature)
    throw Error(Errc::backend_mismatch, "analytic data are held only by quadrature snapshots");
  return state_->data;
}

std::complex<double> SolutionSnapshot::u_hat_at(double xi) const {
  const auto& d = data();
  const auto m = multipliers(state_->params.order, state_->t, xi);
  return m.r1 * d.u1.fourier(xi) + m.cos_phase * d.u0.fourier(xi);
}

std::complex<double> SolutionSnapshot::ut_hat_at(double xi) const {
  const auto& d = data();
  const auto m = multipliers(state_->params.order, state_->t, xi);
  return m.cos_phase * d.u1.fourier(xi) - m.rho_sin * d.u0.fourier(xi);
}

namespace {

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(Errc::domain, "time must be finite and nonnegative");
}

// Applies the propagator for time dt to spectral data (u^, u_t^) bin by bin.
void propagate_bins(const GridSpec& grid, double s, double dt, std::span<const std::complex<double>> u,
                    std::span<const std::complex<double>> ut, std::vector<std::complex<double>>& u_out,
                    std::vector<std::complex<double>>& ut_out) {
  u_out.resize(grid.size());
  ut_out.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const auto m = multipliers(s, dt, grid.xi(k));
    u_out[k] = m.r1 * ut[k] + m.cos_phase * u[k];
    ut_out[k] = m.cos_phase * ut[k] - m.rho_sin * u[k];
  }
}

}  // namespace

SolutionSnapshot evolve_state(const InitialData& data, const Parameters& params, double t,
                              const EvolveOptions& options) {
  params.require_one_dimensional();
  check_time(t);

  auto state = std::make_shared<SolutionSnapshot::State>();
  state->params = params;
  state->t = t;
  state->backend = options.backend;

  if (options.backend == Backend::quadrature) {
    if (!data.u0.has_analytic_fourier() || !data.u1.has_analytic_fourier())
      throw Error(Errc::backend_mismatch,
                  "quadrature backend needs closed-form transforms; use the grid backend for sampled or bump data");
    state->data = data;
    return SolutionSnapshot(std::move(state));
  }

  if (t > kGridTimeCap)
    throw Error(Errc::backend_cap, "grid backend is capped at t <= 100; use the quadrature backend for t = " +
                                       std::to_string(t));
  const GridSpec& grid = options.grid;
  for (const auto* p : {&data.u0, &data.u1}) {
    const double ratio = boundary_ratio(*p, grid);
    if (ratio > kBoundaryTolerance)
      state->warnings.push_back("datum not negligible at |x| = L (relative magnitude " + std::to_string(ratio) +
                                "); periodisation error may be visible");
  }
  const auto u0 = SpectralField::from_profile(data.u0, grid);
  const auto u1 = SpectralField::from_profile(data.u1, grid);
  std::vector<std::complex<double>> u, ut;
  propagate_bins(grid, params.order, t, u0.values(), u1.values(), u, ut);
  state->u_hat.emplace(grid, std::move(u));
  state->ut_hat.emplace(grid, std::move(ut));
  return SolutionSnapshot(std::move(state));
}

SolutionSnapshot evolve_state(const SolutionSnapshot& start, double dt) {
  check_time(dt);
  auto state = std::make_shared<SolutionSnapshot::State>();
  state->params = start.parameters();
  state->t = start.time() + dt;
  state->backend = start.backend();
  state->warnings.assign(start.warnings().begin(), start.warnings().end());
  if (start.backend() == Backend::quadrature) {
    state->data = start.data();
    return SolutionSnapshot(std::move(state));
  }
  if (state->t > kGridTimeCap)
    throw Error(Errc::backend_cap, "grid backend is capped at t <= 100; use the quadrature backend");
  const auto& grid = start.u_hat().grid();
  std::vector<std::complex<double>> u, ut;
  propagate_bins(grid, state->params.order, dt, start.u_hat().values(), start.ut_hat().values(), u, ut);
  state->u_hat.emplace(grid, std::move(u));
  state->ut_hat.emplace(grid, std::move(ut));
  return SolutionSnapshot(std::move(state));
}

// ---------------------------------------------------------------------------
// Spectral integrals

namespace {

double grid_band_integral(const SolutionSnapshot& snap, Density density, double lo, double hi) {
  const double s = snap.parameters().order;
  const auto& u = snap.u_hat();
  const auto& ut = snap.ut_hat();
  const auto& g = u.grid();
  double acc = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double a = std::abs(g.xi(k));
    if (a < lo || !(a < hi)) continue;
    switch (density) {
      case Density::solution: acc += std::norm(u[k]); break;
      case Density::velocity: acc += std::norm(ut[k]); break;
      case Density::fractional: {
        const double r = abs_power(a, s);
        acc += r * r * std::norm(u[k]);
        break;
      }
    }
  }
  return acc * g.dxi();
}

// Breakpoints: zeros of sin(t xi^s), xi_k = (k pi / t)^{1/s}, merged with a
// coarse uniform partition so slowly varying envelopes are also resolved.
class PanelWalker {
 public:
  PanelWalker(double s, double t, double lo, double hi, double coarse)
      : s_(s), t_(t), hi_(hi), coarse_(coarse), current_(lo) {
    next_uniform_ = coarse * (std::floor(lo / coarse) + 1.0);
    if (t > 0.0) {
      k_ = std::floor(t * abs_power(lo, s) / kPi) + 1.0;
      next_phase_ = phase_zero(k_);
      while (next_phase_ <= lo) next_phase_ = phase_zero(++k_);
    } else {
      next_phase_ = std::numeric_limits<double>::infinity();
    }
  }

  bool next(double& a, double& b) {
    if (!(current_ < hi_)) return false;
    a = current_;
    // A uniform break just short of a phase zero would leave a sliver panel.
    while (next_uniform_ < next_phase_ && next_phase_ - next_uniform_ < 0.25 * (next_uniform_ - current_))
      next_uniform_ += coarse_;
    b = std::min({next_phase_, next_uniform_, hi_});
    if (b == next_phase_) next_phase_ = phase_zero(++k_);
    if (b == next_uniform_) next_uniform_ += coarse_;
    current_ = b;
    return true;
  }

 private:
  double phase_zero(double k) const { return std::pow(k * kPi / t_, 1.0 / s_); }

  double s_, t_, hi_, coarse_;
  double current_;
  double next_uniform_;
  double next_phase_ = 0.0;
  double k_ = 0.0;
};

double quadrature_band_integral(const SolutionSnapshot& snap, Density density, double lo, double hi) {
  const auto& d = snap.data();
  if (d.u0.is_zero() && d.u1.is_zero()) return 0.0;
  const double s = snap.parameters().order;
  const double t = snap.time();
  const double extent = std::max(d.u0.spectral_extent(), d.u1.spectral_extent());
  const double top = std::min(hi, extent);
  if (!(top > lo)) return 0.0;

  const bool has_u0 = !d.u0.is_zero();
  const bool has_u1 = !d.u1.is_zero();
  // Real data: u^(t, -xi) = conj(u^(t, xi)), so every density is even in xi.
  auto integrand = [&](double xi) {
    const auto m = multipliers(s, t, xi);
    const std::complex<double> f0 = has_u0 ? d.u0.fourier(xi) : std::complex<double>{};
    const std::complex<double> f1 = has_u1 ? d.u1.fourier(xi) : std::complex<double>{};
    switch (density) {
      case Density::solution: return std::norm(m.r1 * f1 + m.cos_phase * f0);
      case Density::velocity: return std::norm(m.cos_phase * f1 - m.rho_sin * f0);
      case Density::fractional: {
        const double r = abs_power(xi, s);
        return r * r * std::norm(m.r1 * f1 + m.cos_phase * f0);
      }
    }
    return 0.0;
  };

  // One non-adaptive pass fixes the absolute scale, so panels whose own value
  // is tiny (next to a phase zero) are not refined down to rounding noise.
  std::vector<double> breaks{lo};
  {
    PanelWalker walker(s, t, lo, top, extent / 64.0);
    double a = 0.0, b = 0.0;
    while (walker.next(a, b)) breaks.push_back(b);
  }
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    scale += std::abs(quad::detail::kronrod15(integrand, breaks[i], breaks[i + 1]).value);

  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.abs_tol = std::max(1e-300, 1e-15 * scale);
  opt.max_depth = 50;
  const auto total = quad::integrate_panels(integrand, breaks, opt);
  if (!total.converged && total.abs_error > 1e-9 * std::abs(total.value))
    throw Error(Errc::numerical_failure, "spectral quadrature at t = " + std::to_string(t) +
                                             " stalled: value " + std::to_string(total.value) + ", error " +
                                             std::to_string(total.abs_error));
  return 2.0 * total.value;
}

}  // namespace

double spectral_integral(const SolutionSnapshot& snap, Density density, double lo, double hi) {
  if (!(lo >= 0.0) || !(hi >= lo)) throw Error(Errc::domain, "frequency band needs 0 <= lo <= hi");
  return snap.backend() == Backend::grid ? grid_band_integral(snap, density, lo, hi)
                                         : quadrature_band_integral(snap, density, lo, hi);
}

double spectral_l2_norm(const SolutionSnapshot& snap) {
  return std::sqrt(spectral_integral(snap, Density::solution));
}

double l2_norm(const SolutionSnapshot& snap) { return spectral_l2_norm(snap) / std::sqrt(kTwoPi); }

double velocity_l2_norm(const SolutionSnapshot& snap) {
  return std::sqrt(spectral_integral(snap, Density::velocity) / kTwoPi);
}

double hs_seminorm(const SolutionSnapshot& snap) {
  return std::sqrt(spectral_integral(snap, Density::fractional) / kTwoPi);
}

double hs_norm(const SolutionSnapshot& snap) {
  const double l2 = l2_norm(snap);
  const double semi = hs_seminorm(snap);
  return std::sqrt(l2 * l2 + 2.0 / fractional_laplacian_constant(snap.parameters().order) * semi * semi);
}

double energy(const SolutionSnapshot& snap) {
  return 0.5 * (spectral_integral(snap, Density::velocity) + spectral_integral(snap, Density::fractional)) / kTwoPi;
}

}  // namespace fracwave
