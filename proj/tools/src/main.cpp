#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qlangevin/cli/config.hpp"
#include "qlangevin/cli/run.hpp"

namespace cli = qlangevin::cli;

namespace {

int run_preset_command(cli::Preset preset, const std::string& variant, const std::string& outdir,
                       std::size_t steps) {
  cli::VariantSelection sel = cli::VariantSelection::proposed;
  if (variant == "caldeira_leggett") {
    sel = cli::VariantSelection::caldeira_leggett;
  } else if (variant == "both") {
    sel = cli::VariantSelection::both;
  }
  const auto configs = cli::preset_configs(preset, sel, outdir, steps);
  const auto runs = cli::run_preset(configs, true);
  int code = cli::kExitOk;
  for (const auto& r : runs) {
    if (r.ok) {
      cli::print_summary(std::cout, r.outcome);
      std::cout << "  wrote " << r.config.output_path << '\n';
    } else {
      std::cerr << "run " << r.config.output_path << " failed: " << r.error << '\n';
      code = std::max(code, r.exit_code);
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Langevin master-equation simulator"};
  app.require_subcommand(1);

  std::string config_path;
  auto* simulate = app.add_subcommand("simulate", "Run one configuration and write its CSV");
  simulate->add_option("config", config_path, "Config file")->required();

  std::string variant = "proposed";
  std::string outdir = ".";
  std::size_t steps = 0;
  auto add_preset = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--variant", variant, "proposed, caldeira_leggett or both")
        ->check(CLI::IsMember({"proposed", "caldeira_leggett", "both"}));
    sub->add_option("--outdir", outdir, "Directory for the CSV files");
    sub->add_option("--steps", steps, "Override the number of steps");
    return sub;
  };
  auto* fig1 = add_preset("fig1", "Harmonic oscillator runs, f = 1, 2, 3, 4");
  auto* fig2 = add_preset("fig2", "Infinite well runs, f = 1.5, 3, 4.5, 6");

  std::string theta_config;
  auto* theta = app.add_subcommand("validate-theta", "Cross-check the friction operator routes");
  theta->add_option("config", theta_config, "Config file")->required();

  std::uint64_t seed = 42;
  std::size_t ntraj = 10000;
  auto* gbm = app.add_subcommand("gbm-bench", "Monte Carlo check of the averaged GBM equation");
  gbm->add_option("--seed", seed, "RNG seed");
  gbm->add_option("--ntraj", ntraj, "Number of trajectories");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitConfig;
  }

  try {
    if (simulate->parsed()) {
      cli::run_simulation(cli::load_config(config_path), std::cout);
      return cli::kExitOk;
    }
    if (fig1->parsed()) {
      return run_preset_command(cli::Preset::fig1, variant, outdir, steps);
    }
    if (fig2->parsed()) {
      return run_preset_command(cli::Preset::fig2, variant, outdir, steps);
    }
    if (theta->parsed()) {
      const auto report = cli::validate_theta(cli::load_config(theta_config));
      cli::print_theta_validation(std::cout, report);
      return report.passed() ? cli::kExitOk : cli::kExitValidation;
    }
    if (gbm->parsed()) {
      const auto report = cli::run_gbm_benchmark(seed, ntraj);
      cli::print_gbm_report(std::cout, report);
      return report.passed() ? cli::kExitOk : cli::kExitValidation;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
  return cli::kExitOk;
}
