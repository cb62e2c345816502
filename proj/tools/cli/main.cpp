#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "config.hpp"
#include "fracwave/error.hpp"
#include "runners.hpp"

int main(int argc, char** argv) {
  using namespace fracwave;
  CLI::App app{"fracwave: fractional wave equation experiments"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string backend;
  bool plot = false;

  for (const char* name : {"solve", "rates", "lemmas", "sandwich", "energy"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "experiment config file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory (overrides the config)");
    sub->add_option("--backend", backend, "grid or quadrature (overrides the config)")
        ->check(CLI::IsMember({"grid", "quadrature"}));
    sub->add_flag("--plot", plot, "also write plot.svg");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    auto config = cli::load_config(config_path);
    config.experiment = app.get_subcommands().front()->get_name();
    if (!out_dir.empty()) config.output = out_dir;
    if (!backend.empty()) config.backend = backend == "grid" ? Backend::grid : Backend::quadrature;
    if (plot) config.plot = true;

    const auto result = cli::run_experiment(config);
    for (const auto& v : result.verdicts)
      std::cout << (v.pass ? "PASS " : "FAIL ") << v.name << ": " << v.detail << "\n";
    std::cout << "outputs in " << config.output.string() << "\n";
    return result.pass() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "fracwave: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "fracwave: " << e.what() << "\n";
    return 2;
  }
}
