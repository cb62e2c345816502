#include "fracwave/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fracwave/error.hpp"
#include "fracwave/lemma_oracles.hpp"

namespace fracwave {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

std::string num(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

void require_polynomial_regime(double s) {
  if (!(s > 0.5 && s < 1.0))
    throw Error(Errc::wrong_regime, "polynomial growth bounds need s in (1/2, 1), got s = " + num(s) +
                                        "; use the logarithmic bounds at s = 1/2");
}

}  // namespace

// ---------------------------------------------------------------------------
// BoundSpec

double BoundSpec::formula(double t) const {
  switch (form) {
    case BoundForm::power:
      return constant * std::pow(t, exponent);
    case BoundForm::sqrt_log:
      return t > 1.0 ? constant * std::sqrt(std::log(t)) : std::numeric_limits<double>::quiet_NaN();
    case BoundForm::constant:
      return constant;
  }
  return constant;
}

double BoundSpec::operator()(double t) const {
  if (form == BoundForm::sqrt_log && !(t > 1.0))
    throw Error(Errc::validity, "log-form bound evaluated at t = " + num(t) + " <= 1");
  if (valid_from && t < *valid_from)
    throw Error(Errc::validity, "bound '" + label + "' evaluated at t = " + num(t) + " below its validity start " +
                                    num(*valid_from));
  if (t < 0.0) throw Error(Errc::validity, "negative time");
  return formula(t);
}

BoundSpec convert_level(const BoundSpec& bound, NormLevel level) {
  if (bound.level == level) return bound;
  BoundSpec out = bound;
  const double factor = std::sqrt(2.0 * kPi);
  out.constant = level == NormLevel::physical ? bound.constant / factor : bound.constant * factor;
  out.level = level;
  return out;
}

// ---------------------------------------------------------------------------
// theta0

double sampled_sinc_minimum(double theta0, std::size_t samples) {
  double lo = 1.0;
  for (std::size_t i = 1; i <= samples; ++i) lo = std::min(lo, sinc(theta0 * static_cast<double>(i) / samples));
  return lo;
}

double feasible_theta0_sup(double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw Error(Errc::domain, "threshold must lie in (0, 1)");
  // sin(x)/x decreases from 1 to 0 on (0, pi).
  double a = 0.0, b = kPi;
  for (int i = 0; i < 200 && b - a > 1e-16; ++i) {
    const double m = 0.5 * (a + b);
    (sinc(m) >= threshold ? a : b) = m;
  }
  return a;
}

double select_theta0(double threshold, double requested) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw Error(Errc::domain, "threshold must lie in (0, 1)");
  if (!(requested > 0.0 && requested < 1.0)) throw Error(Errc::domain, "theta0 must lie in (0, 1)");
  const double lo = sampled_sinc_minimum(requested);
  if (lo >= threshold) return requested;
  throw Error(Errc::infeasible_threshold, "min of sin(theta)/theta on (0, " + num(requested) + "] is " + num(lo) +
                                              " < " + num(threshold) + "; feasible sup is theta0 = " +
                                              num(feasible_theta0_sup(threshold)));
}

// ---------------------------------------------------------------------------
// Frequency splitting

SplitReport fourier_split(const InitialData& data, const Parameters& params, double t, double theta0) {
  if (!(t > 1.0)) throw Error(Errc::validity, "frequency splitting needs t > 1, got " + num(t));
  if (!(theta0 > 0.0 && theta0 < 1.0)) throw Error(Errc::domain, "theta0 must lie in (0, 1)");
  SplitReport r;
  r.t = t;
  r.theta0 = theta0;
  r.cut = theta0 * std::pow(t, -1.0 / params.order);
  if (data.u0.is_zero() && data.u1.is_zero()) return r;
  EvolveOptions opt;
  opt.backend = Backend::quadrature;
  const auto snap = evolve_state(data, params, t, opt);
  r.low = spectral_integral(snap, Density::solution, 0.0, r.cut);
  r.high = spectral_integral(snap, Density::solution, r.cut);
  r.total = spectral_integral(snap, Density::solution);
  return r;
}

// ---------------------------------------------------------------------------
// Envelopes

BoundSpec polynomial_lower_bound(double moment, double theta0, double s) {
  require_polynomial_regime(s);
  BoundSpec b;
  b.kind = BoundKind::lower;
  b.form = BoundForm::power;
  b.constant = 0.25 * theta0 * std::abs(moment);
  b.exponent = 1.0 - 1.0 / (2.0 * s);
  b.level = NormLevel::spectral;
  b.label = "polynomial lower";
  return b;
}

BoundSpec polynomial_upper_bound(double m1, double s) {
  require_polynomial_regime(s);
  if (m1 < 0.0) throw Error(Errc::domain, "norm sum must be nonnegative");
  BoundSpec b;
  b.kind = BoundKind::upper;
  b.form = BoundForm::power;
  b.constant = std::sqrt(4.0 * s / (2.0 * s - 1.0)) * m1;
  b.exponent = 1.0 - 1.0 / (2.0 * s);
  b.level = NormLevel::spectral;
  b.label = "polynomial upper";
  return b;
}

BoundSpec log_lower_bound(double moment) {
  BoundSpec b;
  b.kind = BoundKind::lower;
  b.form = BoundForm::sqrt_log;
  b.constant = std::abs(moment) / (3.0 * kE);
  b.level = NormLevel::spectral;
  b.label = "logarithmic lower";
  return b;
}

BoundSpec log_upper_bound(double m2) {
  if (m2 < 0.0) throw Error(Errc::domain, "norm sum must be nonnegative");
  BoundSpec b;
  b.kind = BoundKind::upper;
  b.form = BoundForm::sqrt_log;
  b.constant = 2.0 * m2;
  b.level = NormLevel::spectral;
  b.label = "logarithmic upper";
  return b;
}

// ---------------------------------------------------------------------------
// K1

quad::Result k1_log_integral_result(double t) {
  if (!(t > 1.0)) throw Error(Errc::validity, "K1 needs t > 1, got " + num(t));
  // exp(-r^2) < 1e-18 beyond r = 6.5.
  constexpr double r_max = 6.5;
  auto f = [t](double r) {
    if (r == 0.0) return 2.0 * t * t;
    const double h = std::sin(t * std::sqrt(r));
    return 2.0 * std::exp(-r * r) * h * h / r;
  };
  std::vector<double> breaks{0.0};
  for (long k = 1;; ++k) {
    const double z = kPi * static_cast<double>(k) / t;
    const double r = z * z;
    if (r >= r_max) break;
    breaks.push_back(r);
  }
  breaks.push_back(r_max);
  quad::Options opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 0.0;
  auto res = quad::integrate_panels(f, breaks, opt);
  const double rel = res.abs_error / std::abs(res.value);
  if (!(rel <= 1e-6)) {
    std::ostringstream os;
    os << "K1(" << t << ") quadrature: value " << res.value << ", error estimate " << res.abs_error << " over "
       << breaks.size() - 1 << " panels, " << res.evaluations << " evaluations";
    throw Error(Errc::numerical_failure, os.str());
  }
  return res;
}

double k1_log_integral(double t) { return k1_log_integral_result(t).value; }

double k1_lower_envelope(double t) { return 2.0 / (3.0 * kE) * (std::log(t) + std::log(4.0) - std::log(kPi)); }

// ---------------------------------------------------------------------------
// Area sums

namespace {

// \int_a^b exp(-r^2)/r dr = \int exp(-e^{2v}) dv over [log a, log b].
double decay_integral(double a, double b) {
  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 0.0;
  const double la = std::log(a), lb = std::log(b);
  const int panels = std::max(1, static_cast<int>(std::ceil((lb - la) / 0.5)));
  std::vector<double> breaks;
  for (int i = 0; i <= panels; ++i) breaks.push_back(la + (lb - la) * i / panels);
  return quad::integrate_panels([](double v) { return std::exp(-std::exp(2.0 * v)); }, breaks, opt).value;
}

double tail_bound_at(double a) { return std::exp(-a * a) / (2.0 * a * a); }

}  // namespace

AreaSumReport area_sums(double t, double tolerance) {
  if (!(t > kPi / 4.0)) throw Error(Errc::validity, "area sums need t > pi/4, got " + num(t));
  if (!(tolerance > 0.0)) throw Error(Errc::domain, "tolerance must be positive");
  AreaSumReport r;
  r.t = t;
  r.tolerance = tolerance;
  auto endpoint = [t](double q) {
    const double z = q * kPi / t;
    return z * z;
  };
  r.b_within_2a = true;
  for (std::size_t i = 0;; ++i) {
    const double a = endpoint(0.25 + static_cast<double>(i));
    const double b = endpoint(0.75 + static_cast<double>(i));
    const double next = endpoint(1.25 + static_cast<double>(i));
    const double A = decay_integral(a, b);
    const double B = decay_integral(b, next);
    r.a.push_back(a);
    r.b.push_back(b);
    r.A.push_back(A);
    r.B.push_back(B);
    r.sum_A += A;
    r.sum_B += B;
    r.max_B_over_A = std::max(r.max_B_over_A, B / A);
    if (!(B <= 2.0 * A)) r.b_within_2a = false;
    r.tail_bound = tail_bound_at(next);
    if (r.tail_bound < tolerance * r.sum_A) break;
    if (i > 100000000) throw Error(Errc::numerical_failure, "area sums did not reach the truncation tolerance");
  }
  r.terms = r.A.size();
  r.total = decay_integral(r.a.front(), std::max(7.0, 2.0 * r.a.front()));
  r.total_within_3a = r.total <= 3.0 * r.sum_A;
  return r;
}

// ---------------------------------------------------------------------------
// Bounded solutions

BoundSpec bounded_upper_bound(const BoundedNorms& norms, double constant, BoundedTarget target,
                              BoundedWeight weight) {
  if (!(constant > 0.0)) throw Error(Errc::domain, "constant C must be positive");
  auto need = [](const std::optional<double>& v, const char* name) {
    if (!v) throw Error(Errc::input, std::string("missing norm ") + name);
    if (!(*v >= 0.0)) throw Error(Errc::input, std::string("norm ") + name + " must be nonnegative");
    return *v;
  };
  const double u0 = target == BoundedTarget::l2 ? need(norms.u0_l2, "||u0||_2") : need(norms.u0_hs, "||u0||_{H^s}");
  const double u1 = need(norms.u1_l2, "||u1||_2");
  const double w =
      weight == BoundedWeight::l1 ? need(norms.u1_l1, "||u1||_1") : need(norms.u1_weighted, "||u1||_{1,gamma}");
  BoundSpec b;
  b.kind = BoundKind::upper;
  b.form = BoundForm::constant;
  b.constant = std::sqrt(2.0) * u0 + constant * (u1 + w);
  b.valid_from = 0.0;
  b.level = NormLevel::physical;
  b.label = target == BoundedTarget::l2 ? "bounded L2" : "bounded H^s";
  return b;
}

double measure_constant(std::span<const Profile> family,
                        const std::function<RatioTerms(const Profile&)>& functional) {
  if (family.empty()) throw Error(Errc::input, "empty profile family");
  double best = -1.0;
  for (const auto& p : family) {
    const auto terms = functional(p);
    if (terms.left == 0.0 && terms.right == 0.0) continue;
    if (terms.right == 0.0) return std::numeric_limits<double>::infinity();
    best = std::max(best, terms.left / terms.right);
  }
  if (best < 0.0) throw Error(Errc::input, "every member of the family gives a 0/0 ratio");
  return best;
}

double measure_constant(std::span<const Profile> family, ConstantFunctional which, const FunctionalParams& params) {
  switch (which) {
    case ConstantFunctional::riesz_l1:
      return measure_constant(family, [&](const Profile& p) {
        const double l1 = l1_norm(p), l2 = l2_norm(p);
        return RatioTerms{riesz_energy(p, params.theta), l1 * l1 + l2 * l2};
      });
    case ConstantFunctional::riesz_weighted:
      return measure_constant(family, [&](const Profile& p) {
        const double w = weighted_l1_norm(p, params.gamma), l2 = l2_norm(p);
        return RatioTerms{riesz_energy(p, params.theta), w * w + l2 * l2};
      });
    case ConstantFunctional::bounded_sup:
      // |sin(t r)/r| <= r^{-1} with r = |xi|^s, so
      // sup_t ||u(t)||_2 <= (2 pi)^{-1/2} (\int |u1^|^2 |xi|^{-2s})^{1/2}.
      return measure_constant(family, [&](const Profile& p) {
        const double left = std::sqrt(riesz_energy(p, params.order) / (2.0 * kPi));
        return RatioTerms{left, l2_norm(p) + weighted_l1_norm(p, params.gamma)};
      });
  }
  throw Error(Errc::input, "unknown functional");
}

}  // namespace fracwave
