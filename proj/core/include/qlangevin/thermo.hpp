#pragma once

#include "qlangevin/friction.hpp"
#include "qlangevin/liouvillian.hpp"
#include "qlangevin/matrix.hpp"
#include "qlangevin/models.hpp"

namespace qlangevin {

// Canonical state e^{-H/kB T}/Z. The logarithm is kept analytically because
// upper populations on the well are far below the eigenvalue floor.
struct Equilibrium {
  ComplexMatrix rho;
  ComplexMatrix log_rho;
  double log_z = 0.0;
};

Equilibrium canonical_state(const SystemModel& model, const BathParams& bath);

double internal_energy(const ComplexMatrix& rho, const ComplexMatrix& h);
double kinetic_energy(const ComplexMatrix& rho, const SystemModel& model);
/// Tr(ρ(pΘ + Θp))/4m
double modified_kinetic_energy(const ComplexMatrix& rho, const SystemModel& model,
                               const ComplexMatrix& theta);
/// ½mω² Tr(ρx²) on the oscillator; ⟨H⟩ - ⟨p²⟩/2m otherwise (no potential
/// operator exists for the well).
double potential_energy(const ComplexMatrix& rho, const SystemModel& model);

double heat_rate(const ComplexMatrix& rho, const Liouvillian& l, const ComplexMatrix& h);
double work_rate(const ComplexMatrix& rho, const SystemModel& model, double force);

/// -kB Σ p ln p over eigenvalues; eigenvalues below kLogFloor contribute 0.
double entropy(const ComplexMatrix& rho, double kb = 1.0);
double entropy(const HermitianEigen& eig, double kb = 1.0);
/// -kB Tr(dρ/dt ln ρ)
double entropy_rate(const ComplexMatrix& rho, const ComplexMatrix& drho_dt, double kb = 1.0);
/// kB Tr[Rρ (ln ρ_eq - ln ρ)]
double entropy_production_rate(const ComplexMatrix& rho, const Liouvillian& l,
                               const ComplexMatrix& log_rho_eq, double kb = 1.0);
double entropy_flow_rate(const ComplexMatrix& rho, const Liouvillian& l, const ComplexMatrix& h,
                         double temperature);

/// Tr[ρ1 ln ρ1 - ρ1 ln ρ2]
double relative_entropy(const ComplexMatrix& rho1, const ComplexMatrix& rho2);
double relative_entropy_log(const ComplexMatrix& rho1, const ComplexMatrix& log_rho2);
/// kB T S(ρ|ρ_eq) - kB T ln Z
double free_energy(const ComplexMatrix& rho, const Equilibrium& eq, const BathParams& bath);

double purity(const ComplexMatrix& rho);
/// N · ‖ρ with its diagonal zeroed‖₂
double coherence(const ComplexMatrix& rho);
double distance(const ComplexMatrix& rho, const ComplexMatrix& rho_eq);

struct ThermoRecord {
  double t = 0.0;
  double e_total = 0.0;
  double e_kin = 0.0;
  double e_pot = 0.0;
  double e_kin_mod = 0.0;
  double work_rate = 0.0;
  double heat_rate = 0.0;
  double entropy = 0.0;
  double entropy_rate = 0.0;
  double entropy_flow_rate = 0.0;
  double entropy_production_rate = 0.0;
  double free_energy = 0.0;
  double purity = 0.0;
  double coherence = 0.0;
  double distance = 0.0;
};

// Evaluates every observable of one state, sharing a single
// eigendecomposition and the precomputed operator products.
class ThermoEvaluator {
 public:
  ThermoEvaluator(SystemModel model, BathParams bath, Liouvillian l, ComplexMatrix theta,
                  double force = 0.0);

  ThermoRecord evaluate(const ComplexMatrix& rho, double t) const;
  ThermoRecord evaluate(const ComplexMatrix& rho, const HermitianEigen& eig, double t) const;

  const Equilibrium& equilibrium() const { return eq_; }
  const Liouvillian& liouvillian() const { return l_; }
  const SystemModel& model() const { return model_; }
  const BathParams& bath() const { return bath_; }
  const ComplexMatrix& theta() const { return theta_; }

 private:
  SystemModel model_;
  BathParams bath_;
  Liouvillian l_;
  ComplexMatrix theta_;
  double force_;
  Equilibrium eq_;
  ComplexMatrix h_;
  ComplexMatrix p2_;
  ComplexMatrix x2_;
  ComplexMatrix p_theta_;
};

}  // namespace qlangevin
