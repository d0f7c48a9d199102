#include "qlangevin/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qlangevin/errors.hpp"

namespace qlangevin {

namespace {

constexpr double kStateTolerance = 1e-10;
constexpr double kStateNegativity = -1e-9;

}  // namespace

HealthMetrics HealthMetrics::worst(const HealthMetrics& other) const {
  return {std::max(trace_error, other.trace_error), std::max(hermiticity, other.hermiticity),
          std::min(min_eigenvalue, other.min_eigenvalue)};
}

HealthMetrics check_health(const ComplexMatrix& rho, const HermitianEigen& eig) {
  HealthMetrics h;
  h.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  h.hermiticity = hermiticity_residual(rho);
  h.min_eigenvalue = eig.values.minCoeff();
  return h;
}

HealthMetrics check_health(const ComplexMatrix& rho) {
  // Hermiticity is reported, not enforced, here.
  const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
  return check_health(rho, herm_eig(sym));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  require_square(m_, "DensityMatrix");
  const HealthMetrics h = check_health(m_);
  if (h.trace_error > kStateTolerance) {
    throw DomainError("DensityMatrix: trace differs from 1 by " + std::to_string(h.trace_error));
  }
  if (h.hermiticity > kStateTolerance) {
    throw SymmetryError("DensityMatrix: not Hermitian, residual " +
                        std::to_string(h.hermiticity));
  }
  if (h.min_eigenvalue < kStateNegativity) {
    throw PositivityError("DensityMatrix: eigenvalue " + std::to_string(h.min_eigenvalue));
  }
}

DensityMatrix initial_state(std::size_t n_levels, double f) {
  if (n_levels < 1) {
    throw ParameterError("initial_state: n_levels must be at least 1");
  }
  if (!std::isfinite(f)) {
    throw ParameterError("initial_state: exponent must be finite");
  }
  const auto n = static_cast<Eigen::Index>(n_levels);
  RealVector w(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    w(k) = std::pow(static_cast<double>(k + 1), -f);
  }
  w /= w.sum();
  return DensityMatrix(ComplexMatrix(w.cast<Complex>().asDiagonal()));
}

ComplexMatrix propagator(const Liouvillian& l, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ParameterError("propagator: dt must be positive, got " + std::to_string(dt));
  }
  return expm(l.full * dt);
}

EvolutionResult evolve(const DensityMatrix& rho0, const ComplexMatrix& p,
                       const EvolutionConfig& cfg, const ThermoEvaluator& observer) {
  const Eigen::Index n = rho0.dim();
  if (p.rows() != n * n || p.cols() != n * n) {
    throw DimensionError("evolve: propagator does not match the state dimension");
  }
  if (cfg.record_every < 1) {
    throw ParameterError("evolve: record_every must be at least 1");
  }

  EvolutionResult out;
  auto sample = [&](const ComplexMatrix& rho, std::size_t step, bool record) {
    const ComplexMatrix sym = 0.5 * (rho + rho.adjoint());
    const HermitianEigen eig = herm_eig(sym, cfg.max_hermiticity);
    const HealthMetrics h = check_health(rho, eig);
    out.worst_health = step == 0 ? h : out.worst_health.worst(h);
    std::ostringstream why;
    if (h.trace_error > cfg.max_trace_error) {
      why << "trace drift " << h.trace_error;
    } else if (h.hermiticity > cfg.max_hermiticity) {
      why << "hermiticity residual " << h.hermiticity;
    } else if (h.min_eigenvalue < cfg.min_eigenvalue) {
      why << "eigenvalue " << h.min_eigenvalue;
    }
    if (!why.str().empty()) {
      throw StateHealthError(step, why.str());
    }
    if (record) {
      out.records.push_back(observer.evaluate(sym, eig, static_cast<double>(step) * cfg.dt));
      out.health.push_back(h);
      if (cfg.keep_states) {
        out.states.push_back(rho);
      }
    }
  };

  ComplexVector v = vectorize(rho0.matrix());
  sample(rho0.matrix(), 0, true);
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    v = p * v;
    const bool record = step % cfg.record_every == 0 || step == cfg.steps;
    sample(unvectorize(v, n, n), step, record);
  }
  out.final_state = unvectorize(v, n, n);
  return out;
}

}  // namespace qlangevin
