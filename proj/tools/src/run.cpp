#include "qlangevin/cli/run.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "qlangevin/errors.hpp"
#include "qlangevin/friction.hpp"
#include "qlangevin/gbm.hpp"

namespace qlangevin::cli {

namespace {

struct Pipeline {
  ComplexMatrix theta;
  ComplexMatrix propagator;
  ConstraintReport constraints;
  ThermoEvaluator observer;
};

Pipeline build_pipeline(const RunConfig& cfg) {
  const SystemModel model = cfg.build_model();
  const BathParams bath = cfg.build_bath();
  ComplexMatrix theta = friction_operator(model, bath, cfg.theta_route, cfg.series_order);
  Liouvillian l = assemble(model, bath, theta, cfg.force);
  ConstraintReport constraints = check_constraints(l);
  ComplexMatrix p = propagator(l, cfg.dt);
  ThermoEvaluator observer(model, bath, std::move(l), theta, cfg.force);
  return {std::move(theta), std::move(p), std::move(constraints), std::move(observer)};
}

EvolutionConfig evolution_config(const RunConfig& cfg) {
  EvolutionConfig e;
  e.dt = cfg.dt;
  e.steps = cfg.steps;
  e.record_every = cfg.record_every;
  return e;
}

std::string format_f(double f) {
  std::ostringstream s;
  s << f;
  return s.str();
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) != nullptr ||
      dynamic_cast<const ParameterError*>(&e) != nullptr) {
    return kExitConfig;
  }
  if (dynamic_cast<const std::ios_base::failure*>(&e) != nullptr) {
    return kExitConfig;
  }
  return kExitNumeric;
}

void write_csv(std::ostream& out, const std::vector<ThermoRecord>& records) {
  out << kCsvHeader << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : records) {
    out << r.t << ',' << r.e_total << ',' << r.e_kin << ',' << r.e_pot << ',' << r.e_kin_mod
        << ',' << r.work_rate << ',' << r.heat_rate << ',' << r.entropy << ','
        << r.entropy_rate << ',' << r.entropy_flow_rate << ',' << r.entropy_production_rate
        << ',' << r.free_energy << ',' << r.purity << ',' << r.coherence << ',' << r.distance
        << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const std::vector<ThermoRecord>& records) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  }
  write_csv(out, records);
  if (!out) {
    throw std::ios_base::failure("write to " + path.string() + " failed");
  }
}

RunOutcome execute(const RunConfig& cfg, const ThermoEvaluator& observer,
                   const ComplexMatrix& propagator, const ConstraintReport& constraints) {
  RunOutcome out;
  out.config = cfg;
  out.constraints = constraints;
  out.evolution = evolve(initial_state(cfg.levels(), cfg.f_exponent), propagator,
                         evolution_config(cfg), observer);
  return out;
}

RunOutcome execute(const RunConfig& cfg) {
  validate(cfg);
  const Pipeline p = build_pipeline(cfg);
  return execute(cfg, p.observer, p.propagator, p.constraints);
}

void print_summary(std::ostream& log, const RunOutcome& o) {
  const auto& recs = o.evolution.records;
  const ThermoRecord& last = recs.back();
  const HealthMetrics& h = o.evolution.worst_health;
  double min_production = std::numeric_limits<double>::infinity();
  for (const auto& r : recs) {
    min_production = std::min(min_production, r.entropy_production_rate);
  }
  log << std::setprecision(10);
  log << "model=" << to_string(o.config.model) << " variant=" << to_string(o.config.variant)
      << " f=" << o.config.f_exponent << " steps=" << o.config.steps << '\n';
  log << "  final t=" << last.t << " E=" << last.e_total << " F=" << last.free_energy
      << " S=" << last.entropy << " d=" << last.distance << '\n';
  log << "  constraints:";
  for (const auto& c : o.constraints.checks) {
    log << ' ' << c.name << '=' << std::setprecision(3) << c.violation
        << (c.passed ? "" : "(FAIL)");
  }
  log << '\n' << std::setprecision(3);
  log << "  health: max trace error=" << h.trace_error << " max hermiticity=" << h.hermiticity
      << " min eigenvalue=" << h.min_eigenvalue << '\n';
  log << "  min entropy production rate=" << min_production << '\n';
}

RunOutcome run_simulation(const RunConfig& cfg, std::ostream& log) {
  RunOutcome o = execute(cfg);
  write_csv(std::filesystem::path(cfg.output_path), o.evolution.records);
  print_summary(log, o);
  log << "  wrote " << o.evolution.records.size() << " rows to " << cfg.output_path << '\n';
  return o;
}

std::vector<RunConfig> preset_configs(Preset preset, VariantSelection variants,
                                      const std::filesystem::path& outdir, std::size_t steps) {
  RunConfig base;
  std::vector<double> fs;
  std::string name;
  if (preset == Preset::fig1) {
    name = "fig1";
    base.model = ModelKind::oscillator;
    base.n_levels = 16;
    base.mass = 1.0;
    base.omega = 1.0;
    base.beta = 0.3;
    base.dt = std::numbers::pi / 200.0;
    fs = {1.0, 2.0, 3.0, 4.0};
  } else {
    name = "fig2";
    base.model = ModelKind::well;
    base.n_levels = 15;
    base.mass = 3.0;
    base.length = 2.0;
    base.beta = 1.0;
    base.dt = 0.007;
    fs = {1.5, 3.0, 4.5, 6.0};
  }
  base.hbar = 1.0;
  base.kb = 1.0;
  base.temperature = 1.0;
  base.steps = steps == 0 ? 1000 : steps;

  std::vector<Variant> vs;
  if (variants != VariantSelection::caldeira_leggett) {
    vs.push_back(Variant::proposed);
  }
  if (variants != VariantSelection::proposed) {
    vs.push_back(Variant::caldeira_leggett);
  }

  std::vector<RunConfig> out;
  for (Variant v : vs) {
    for (double f : fs) {
      RunConfig c = base;
      c.variant = v;
      c.f_exponent = f;
      c.output_path =
          (outdir / (name + "_" + to_string(v) + "_f" + format_f(f) + ".csv")).string();
      out.push_back(c);
    }
  }
  return out;
}

std::vector<PresetRun> run_preset(const std::vector<RunConfig>& configs, bool write) {
  std::vector<PresetRun> runs(configs.size());
  std::size_t i = 0;
  while (i < configs.size()) {
    // Consecutive configurations that differ only in f share one pipeline.
    std::size_t j = i + 1;
    while (j < configs.size() && configs[j].variant == configs[i].variant &&
           configs[j].model == configs[i].model) {
      ++j;
    }
    std::optional<Pipeline> pipeline;
    std::string setup_error;
    int setup_code = kExitOk;
    try {
      validate(configs[i]);
      pipeline.emplace(build_pipeline(configs[i]));
    } catch (const std::exception& e) {
      setup_error = e.what();
      setup_code = exit_code_for(e);
    }

    std::vector<std::future<void>> jobs;
    for (std::size_t k = i; k < j; ++k) {
      runs[k].config = configs[k];
      if (!pipeline) {
        runs[k].error = setup_error;
        runs[k].exit_code = setup_code;
        continue;
      }
      jobs.push_back(std::async(std::launch::async, [&runs, &pipeline, k, write] {
        PresetRun& r = runs[k];
        try {
          r.outcome = execute(r.config, pipeline->observer, pipeline->propagator,
                              pipeline->constraints);
          if (write) {
            write_csv(std::filesystem::path(r.config.output_path), r.outcome.evolution.records);
          }
          r.ok = true;
        } catch (const std::exception& e) {
          r.error = e.what();
          r.exit_code = exit_code_for(e);
        }
      }));
    }
    for (auto& job : jobs) {
      job.get();
    }
    i = j;
  }
  return runs;
}

bool ThetaValidation::passed() const {
  for (const auto& c : checks) {
    if (!c.informational && !c.passed) {
      return false;
    }
  }
  return true;
}

ThetaValidation validate_theta(const RunConfig& cfg) {
  validate(cfg);
  const SystemModel model = cfg.build_model();
  const BathParams bath = cfg.build_bath();
  ThetaValidation v;
  v.variant = bath.variant();
  auto add = [&v](std::string name, double value, double tol, bool info = false) {
    v.checks.push_back({std::move(name), value, tol, value <= tol, info});
  };

  if (bath.variant() == Variant::caldeira_leggett) {
    const ComplexMatrix theta = friction_operator(model, bath);
    add("max|theta - p|", max_abs(theta - model.p), 0.0);
    add("hermiticity(theta)", hermiticity_residual(theta), 1e-10);
    add("stationarity residual", stationarity_residual(model, bath, theta), 1e-10, true);
    v.warnings.push_back("caldeira_leggett variant: theta is the momentum operator itself");
    return v;
  }

  const ComplexMatrix eb = theta_energy_basis(model, bath);
  const ComplexMatrix ly = theta_lyapunov(model, bath);
  const ComplexMatrix qu = theta_quadrature(model, bath);
  const SeriesResult se = theta_series(model, bath, cfg.series_order);

  add("energy_basis vs lyapunov", max_abs(eb - ly), 1e-10);
  add("energy_basis vs quadrature", max_abs(eb - qu), 1e-6);
  add("lyapunov vs quadrature", max_abs(ly - qu), 1e-6);
  add("energy_basis vs series(order " + std::to_string(cfg.series_order) + ")",
      max_abs(eb - se.theta), 1e-6, se.divergent);
  if (se.divergent) {
    std::ostringstream w;
    w << "series route diverges: max |dE|/(2 kB T) = " << se.max_ratio
      << " exceeds pi/2; its deviation is reported but not judged";
    v.warnings.push_back(w.str());
  }
  add("hermiticity(energy_basis)", hermiticity_residual(eb), 1e-10);
  add("hermiticity(lyapunov)", hermiticity_residual(ly), 1e-10);
  add("hermiticity(quadrature)", hermiticity_residual(qu), 1e-10);
  add("hermiticity(series)", hermiticity_residual(se.theta), 1e-10, se.divergent);
  add("stationarity residual", stationarity_residual(model, bath, eb), 1e-10);
  add("quadrature weight |integral - 1|", std::abs(log_coth_weight_integral() - 1.0), 1e-8);
  return v;
}

void print_theta_validation(std::ostream& out, const ThetaValidation& v) {
  out << "variant=" << to_string(v.variant) << '\n';
  out << std::setprecision(3);
  for (const auto& c : v.checks) {
    out << "  " << (c.informational ? "[INFO]" : (c.passed ? "[ OK ]" : "[FAIL]")) << ' '
        << c.name << " = " << c.value << " (tol " << c.tolerance << ")\n";
  }
  for (const auto& w : v.warnings) {
    out << "  warning: " << w << '\n';
  }
  out << (v.passed() ? "theta validation passed" : "theta validation FAILED") << '\n';
}

bool GbmBenchReport::passed() const {
  return std::abs(z) <= 4.0;
}

GbmBenchReport run_gbm_benchmark(std::uint64_t seed, std::size_t n_traj) {
  if (n_traj < 100) {
    throw ConfigError("gbm-bench: ntraj must be at least 100");
  }
  GBMSystem sys;
  sys.drift = ComplexMatrix::Zero(1, 1);
  sys.noise = {ComplexMatrix::Identity(1, 1)};
  sys.alpha = 0.5;
  const ComplexVector y0 = ComplexVector::Ones(1);
  const double dt = 1e-3;
  const std::size_t steps = 1000;

  const TrajectoryStatistics stats = simulate_trajectories(sys, y0, dt, steps, n_traj, seed);
  GbmBenchReport r;
  r.seed = seed;
  r.n_traj = n_traj;
  r.mc_mean = stats.mean.back()(0).real();
  r.std_error = stats.std_error.back()(0).real();
  r.ode_value = mean_ode_solution(sys, y0, dt * static_cast<double>(steps))(0).real();
  r.z = (r.mc_mean - r.ode_value) / r.std_error;
  return r;
}

void print_gbm_report(std::ostream& out, const GbmBenchReport& r) {
  out << std::setprecision(8);
  out << "gbm benchmark: seed=" << r.seed << " ntraj=" << r.n_traj << '\n';
  out << "  monte carlo mean = " << r.mc_mean << '\n';
  out << "  ode value        = " << r.ode_value << '\n';
  out << "  standard error   = " << r.std_error << '\n';
  out << "  z                = " << std::setprecision(4) << r.z << '\n';
  out << (r.passed() ? "  within 4 sigma" : "  OUTSIDE 4 sigma") << '\n';
}

}  // namespace qlangevin::cli
