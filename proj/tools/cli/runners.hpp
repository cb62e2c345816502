#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace fracwave::cli {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunResult {
  std::vector<Verdict> verdicts;
  bool pass() const;
};

/// Each runner writes norms.csv and report.json (and plot.svg when enabled)
/// into config.output. Outputs depend only on the config.
RunResult run_solve(const ExperimentConfig& config);
RunResult run_rates(const ExperimentConfig& config);
RunResult run_lemmas(const ExperimentConfig& config);
RunResult run_sandwich(const ExperimentConfig& config);
RunResult run_energy(const ExperimentConfig& config);

/// Dispatches on config.experiment.
RunResult run_experiment(const ExperimentConfig& config);

}  // namespace fracwave::cli
