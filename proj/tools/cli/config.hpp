#pragma once

// Experiment configuration: a line-oriented "key = value" text format.
//
//   experiment = sandwich
//   order = 0.75
//   u0 = zero
//   u1 = gaussian(amplitude=1, width=1, center=0)
//   t_grid = log(100, 100000, 40)
//   backend = quadrature
//
// Blank lines and '#' comments are ignored. Unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fracwave/grid.hpp"
#include "fracwave/profiles.hpp"
#include "fracwave/spectral_core.hpp"

namespace fracwave::cli {

struct TermDecl {
  std::string kind;  // gaussian | gaussian_derivative | compact_bump | sampled
  double amplitude = 1.0;
  double width = 1.0;
  double center = 0.0;
  double radius = 1.0;
  std::string file;
};

struct ProfileDecl {
  std::vector<TermDecl> terms;  // empty means zero
};

struct GridDecl {
  enum class Kind { log, linear, list } kind = Kind::log;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
  std::vector<double> values;  // list only

  std::vector<double> expand() const;
};

struct ExperimentConfig {
  std::string experiment = "solve";
  Parameters params{1, 0.5};
  ProfileDecl u0;
  ProfileDecl u1;
  GridDecl t_grid;
  Backend backend = Backend::grid;
  double grid_half_width = GridSpec::kDefaultHalfWidth;
  std::size_t grid_points = GridSpec::kDefaultPoints;
  std::filesystem::path output = "out";
  bool bounds = true;
  bool plot = false;
  std::uint64_t seed = 20240101;
  double theta0 = 0.99;
  double rate_tolerance = 0.02;
  double energy_tolerance = 1e-9;
  std::vector<double> lemma_thetas{0.2, 0.4};
  std::vector<double> lemma_gammas{0.0, 0.25, 0.5, 1.0};
  GridDecl xi_grid{GridDecl::Kind::log, 1e-3, 1e2, 500, {}};
  std::size_t random_xi = 0;
  /// Directory that relative file references resolve against; not part of the canonical form.
  std::filesystem::path base_dir;

  GridSpec grid() const { return GridSpec(grid_half_width, grid_points); }
};

/// Parses the text of a config file. Errors are Errc::config with "line N: key: ..." context.
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(canonical(c)) reproduces c exactly.
std::string canonical(const ExperimentConfig& c);

std::string canonical(const ProfileDecl& p);
std::string canonical(const GridDecl& g);

/// Builds the profile; sampled terms read their values from file on c.grid().
Profile build_profile(const ProfileDecl& p, const GridSpec& grid, const std::filesystem::path& base_dir = {});
InitialData build_data(const ExperimentConfig& c);

/// Validates cross-field constraints (empty t grid, unknown experiment, ...).
void validate(const ExperimentConfig& c);

}  // namespace fracwave::cli
