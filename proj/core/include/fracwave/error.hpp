#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracwave {

/// Failure categories raised by the library. Every thrown fracwave::Error
/// carries exactly one of these.
enum class Errc {
  domain,                // argument outside the mathematical domain (s < 0, gamma > 1, ...)
  unsupported_dimension, // numeric evolution requested for n != 1
  backend_mismatch,      // quadrature backend without analytic Fourier data
  backend_cap,           // grid backend asked for t beyond its cap
  validity,              // evaluation outside a bound's validity region (t <= 1, ...)
  wrong_regime,          // e.g. polynomial blow-up bound requested for s <= 1/2
  numerical_failure,     // quadrature did not reach its tolerance
  divergence,            // integral detected as divergent
  precondition,          // lemma hypothesis violated
  input,                 // missing or malformed input
  convention,            // mixing spectral-level and physical-level quantities
  infeasible_threshold,  // theta0 selection cannot meet the requested threshold
  config,                // experiment configuration errors
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fracwave
