#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qlangevin/cli/config.hpp"
#include "qlangevin/evolution.hpp"
#include "qlangevin/liouvillian.hpp"
#include "qlangevin/thermo.hpp"

namespace qlangevin::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitNumeric = 2,
  kExitValidation = 3,
};

/// Exit code for an exception escaping a subcommand.
int exit_code_for(const std::exception& e);

inline constexpr const char* kCsvHeader =
    "t,e_total,e_kin,e_pot,e_kin_mod,work_rate,heat_rate,entropy,entropy_rate,"
    "entropy_flow_rate,entropy_production_rate,free_energy,purity,coherence,distance";

void write_csv(std::ostream& out, const std::vector<ThermoRecord>& records);
void write_csv(const std::filesystem::path& path, const std::vector<ThermoRecord>& records);

struct RunOutcome {
  RunConfig config;
  EvolutionResult evolution;
  ConstraintReport constraints;
};

/// Builds model, bath, Θ and the Liouvillian, then evolves. No I/O.
RunOutcome execute(const RunConfig& cfg);
/// Same, with a precomputed Liouvillian and propagator shared across runs.
RunOutcome execute(const RunConfig& cfg, const ThermoEvaluator& observer,
                   const ComplexMatrix& propagator, const ConstraintReport& constraints);

/// execute() plus CSV output and a summary on `log`.
RunOutcome run_simulation(const RunConfig& cfg, std::ostream& log);

void print_summary(std::ostream& log, const RunOutcome& outcome);

enum class Preset { fig1, fig2 };
enum class VariantSelection { proposed, caldeira_leggett, both };

/// One configuration per f value and selected variant, parameters as in
/// the figures. `steps` of 0 keeps the default 1000.
std::vector<RunConfig> preset_configs(Preset preset, VariantSelection variants,
                                      const std::filesystem::path& outdir, std::size_t steps = 0);

struct PresetRun {
  RunConfig config;
  bool ok = false;
  std::string error;  // set when !ok
  int exit_code = kExitOk;
  RunOutcome outcome;
};

/// Runs every preset configuration, the f-runs of one variant in parallel.
/// With `write` set, each run writes its CSV to config.output_path.
std::vector<PresetRun> run_preset(const std::vector<RunConfig>& configs, bool write);

struct ThetaCheck {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  bool informational = false;  // reported without affecting the verdict
};

struct ThetaValidation {
  Variant variant = Variant::proposed;
  std::vector<ThetaCheck> checks;
  std::vector<std::string> warnings;
  bool passed() const;
};

ThetaValidation validate_theta(const RunConfig& cfg);
void print_theta_validation(std::ostream& out, const ThetaValidation& v);

struct GbmBenchReport {
  std::uint64_t seed = 0;
  std::size_t n_traj = 0;
  double mc_mean = 0.0;
  double ode_value = 0.0;
  double std_error = 0.0;
  double z = 0.0;
  bool passed() const;
};

/// Scalar benchmark c = 0, d = 1, α = ½, y0 = 1, dt = 1e-3 to t = 1.
GbmBenchReport run_gbm_benchmark(std::uint64_t seed, std::size_t n_traj);
void print_gbm_report(std::ostream& out, const GbmBenchReport& r);

}  // namespace qlangevin::cli
