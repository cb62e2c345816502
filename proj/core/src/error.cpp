#include "fracwave/error.hpp"

namespace fracwave {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::domain: return "domain";
    case Errc::unsupported_dimension: return "unsupported-dimension";
    case Errc::backend_mismatch: return "backend-mismatch";
    case Errc::backend_cap: return "backend-cap";
    case Errc::validity: return "validity";
    case Errc::wrong_regime: return "wrong-regime";
    case Errc::numerical_failure: return "numerical-failure";
    case Errc::divergence: return "divergence";
    case Errc::precondition: return "precondition";
    case Errc::input: return "input";
    case Errc::convention: return "convention";
    case Errc::infeasible_threshold: return "infeasible-threshold";
    case Errc::config: return "config";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + " error: " + what), code_(code) {}

}  // namespace fracwave
