#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature on finite panels.
//
// Every spectral integral in the library is assembled from panels whose
// breakpoints the caller chooses (oscillation zeros, band edges, kinks);
// within a panel the rule bisects until the QUADPACK error estimate meets
// max(abs_tol, rel_tol * |panel value|).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace fracwave::quad {

struct Options {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  int max_depth = 60;
};

struct Result {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;

  Result& operator+=(const Result& other) {
    value += other.value;
    abs_error += other.abs_error;
    evaluations += other.evaluations;
    converged = converged && other.converged;
    return *this;
  }
};

namespace detail {

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the Kronrod nodes with odd index (1, 3, 5, 7).
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value;
  double error;
};

template <class F>
PanelEstimate kronrod15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 15> fv{};
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  double kronrod = kKronrodWeights[7] * fv[7];
  double gauss = kGaussWeights[3] * fv[7];
  double abs_sum = kKronrodWeights[7] * std::abs(fv[7]);
  for (int j = 0; j < 7; ++j) {
    const double pair = fv[j] + fv[14 - j];
    kronrod += kKronrodWeights[j] * pair;
    abs_sum += kKronrodWeights[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j)
    asc += kKronrodWeights[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));

  const double ah = std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  asc *= ah;
  abs_sum *= ah;
  if (asc != 0.0 && err != 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (abs_sum > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * abs_sum, err);
  return {kronrod * half, err};
}

inline constexpr int kRoundoffDepth = 6;

template <class F>
void bisect(F& f, double a, double b, PanelEstimate whole, const Options& opt, int depth,
            Result& out) {
  out.evaluations += 15;
  const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(whole.value));
  if (whole.error <= tol || depth >= opt.max_depth || !(b - a > 0.0) ||
      a + 0.5 * (b - a) == a || a + 0.5 * (b - a) == b) {
    if (whole.error > tol) out.converged = false;
    out.value += whole.value;
    out.abs_error += whole.error;
    return;
  }
  const double mid = 0.5 * (a + b);
  const PanelEstimate left = kronrod15(f, a, mid);
  const PanelEstimate right = kronrod15(f, mid, b);
  // Accept the refined pair when it already meets the parent's tolerance.
  if (left.error + right.error <= tol) {
    out.evaluations += 30;
    out.value += left.value + right.value;
    out.abs_error += left.error + right.error;
    return;
  }
  // Roundoff: bisecting no longer reduces the error estimate.
  if (depth >= kRoundoffDepth && left.error + right.error > 0.9 * whole.error) {
    out.converged = false;
    out.evaluations += 30;
    out.value += left.value + right.value;
    out.abs_error += left.error + right.error;
    return;
  }
  bisect(f, a, mid, left, opt, depth + 1, out);
  bisect(f, mid, b, right, opt, depth + 1, out);
}

}  // namespace detail

/// Adaptive integral of f over [a, b] (a <= b).
template <class F>
Result integrate(F&& f, double a, double b, const Options& opt = {}) {
  Result out;
  if (!(b > a)) return out;
  auto est = detail::kronrod15(f, a, b);
  detail::bisect(f, a, b, est, opt, 0, out);
  return out;
}

/// Sum of adaptive integrals over consecutive panels [breaks[i], breaks[i+1]].
template <class F>
Result integrate_panels(F&& f, std::span<const double> breaks, const Options& opt = {}) {
  Result out;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) out += integrate(f, breaks[i], breaks[i + 1], opt);
  return out;
}

}  // namespace fracwave::quad
