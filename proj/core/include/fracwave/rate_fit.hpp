#pragma once

// Norm time series, least-squares growth laws and envelope checks.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracwave/estimates.hpp"
#include "fracwave/spectral_core.hpp"

namespace fracwave {

struct NormSeries {
  std::vector<double> t;
  std::vector<double> values;
  NormLevel level = NormLevel::spectral;
  std::string provenance;
  /// Set for identically zero data; such series carry zeros and cannot be fitted.
  bool zero = false;

  std::size_t size() const { return t.size(); }
};

/// n points geometrically spaced from a to b inclusive.
std::vector<double> logspace(double a, double b, std::size_t n);

/// ||u^(t)||_2 at every t of a strictly increasing positive grid, evaluated in
/// parallel. Grid runs past kGridTimeCap raise Errc::backend_cap.
NormSeries sample_norm_curve(const InitialData& data, const Parameters& params, std::span<const double> t_grid,
                             const EvolveOptions& options = {});

/// Same series under the other Plancherel convention.
NormSeries convert_level(const NormSeries& series, NormLevel level);

struct FitWindow {
  double lo = 0.0;
  double hi = 0.0;
};

/// Last two decades of the grid, starting no earlier than t0.
FitWindow default_window(const NormSeries& series, std::optional<double> t0 = std::nullopt);

enum class RateModel { power_law, log_law, sandwich };

struct RateReport {
  RateModel model = RateModel::power_law;
  double slope = 0.0;  // alpha for power laws, m for log laws
  double intercept = 0.0;
  double residual_rms = 0.0;
  double r_squared = 0.0;
  FitWindow window;
  std::size_t points = 0;

  // Envelope verdicts.
  double pass_fraction = 0.0;
  std::optional<double> t0;
  std::optional<std::size_t> t0_index;
  std::optional<double> first_violation;
  bool lower_monotone = true;
  bool pass = false;
};

/// Slope of log(value) against log(t) over the window (>= 8 points, values > 0).
RateReport fit_power_exponent(const NormSeries& series, const FitWindow& window);
/// Slope of value^2 against log(t) over the window, with R^2. Needs t > 1.
RateReport fit_log_rate(const NormSeries& series, const FitWindow& window);

/// lower(t) <= value <= upper(t) per sample. t0 is the first sample from which
/// the lower bound holds through the end; the check passes when both bounds
/// hold at every sample from t0 on. Mismatched levels raise Errc::convention.
RateReport sandwich_check(const NormSeries& series, const BoundSpec& lower, const BoundSpec& upper);

}  // namespace fracwave
