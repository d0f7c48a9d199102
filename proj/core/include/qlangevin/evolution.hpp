#pragma once

#include <cstddef>
#include <vector>

#include "qlangevin/liouvillian.hpp"
#include "qlangevin/matrix.hpp"
#include "qlangevin/thermo.hpp"

namespace qlangevin {

struct HealthMetrics {
  double trace_error = 0.0;     // |Tr ρ - 1|
  double hermiticity = 0.0;     // max |ρ - ρ†|
  double min_eigenvalue = 0.0;

  // Componentwise worst of two samples.
  HealthMetrics worst(const HealthMetrics& other) const;
};

HealthMetrics check_health(const ComplexMatrix& rho, const HermitianEigen& eig);
HealthMetrics check_health(const ComplexMatrix& rho);

// Validated density matrix: unit trace, Hermitian, no eigenvalue below -1e-9.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// ρ_kk ∝ k^{-f}, k = 1..N, no coherences.
DensityMatrix initial_state(std::size_t n_levels, double f);

/// exp(L dt), computed once and applied repeatedly.
ComplexMatrix propagator(const Liouvillian& l, double dt);

struct EvolutionConfig {
  double dt = 0.0;
  std::size_t steps = 0;
  std::size_t record_every = 1;
  // Abort limits, checked at every step.
  double max_trace_error = 1e-8;
  double max_hermiticity = 1e-8;
  double min_eigenvalue = -1e-9;
  bool keep_states = false;
};

struct EvolutionResult {
  std::vector<ThermoRecord> records;
  std::vector<HealthMetrics> health;  // one per record
  std::vector<ComplexMatrix> states;  // one per record when keep_states
  HealthMetrics worst_health;         // over every step, recorded or not
  ComplexMatrix final_state;
};

/// Steps vec ρ ← P vec ρ. Record 0 is the initial state; further records at
/// every `record_every` steps and at the last step. Throws StateHealthError
/// on the first step outside the configured limits.
EvolutionResult evolve(const DensityMatrix& rho0, const ComplexMatrix& p,
                       const EvolutionConfig& cfg, const ThermoEvaluator& observer);

}  // namespace qlangevin
