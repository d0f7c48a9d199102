#include "qlangevin/thermo.hpp"

#include <cmath>
#include <utility>

#include "qlangevin/errors.hpp"

namespace qlangevin {

namespace {

// Re Tr(AB) without forming the product.
double trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.cwiseProduct(b.transpose()).sum().real();
}

double entropy_from_values(const RealVector& values, double kb) {
  if (values.minCoeff() < -kNegativeEigenTolerance) {
    throw PositivityError("entropy: eigenvalue " + std::to_string(values.minCoeff()) +
                          " is negative");
  }
  double s = 0.0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const double p = values(i);
    if (p >= kLogFloor) {
      s -= p * std::log(p);
    }
  }
  return kb * s;
}

}  // namespace

Equilibrium canonical_state(const SystemModel& model, const BathParams& bath) {
  const double kt = bath.kt();
  const double e0 = model.energies.minCoeff();
  const RealVector w = ((model.energies.array() - e0) / -kt).exp();
  const double sum = w.sum();
  Equilibrium eq;
  eq.log_z = -e0 / kt + std::log(sum);
  eq.rho = (w / sum).cast<Complex>().asDiagonal();
  const RealVector log_rho = (model.energies.array() / -kt) - eq.log_z;
  eq.log_rho = log_rho.cast<Complex>().asDiagonal();
  return eq;
}

double internal_energy(const ComplexMatrix& rho, const ComplexMatrix& h) {
  require_same_shape(rho, h, "internal_energy");
  return trace_product(rho, h);
}

double kinetic_energy(const ComplexMatrix& rho, const SystemModel& model) {
  require_same_shape(rho, model.p, "kinetic_energy");
  return trace_product(rho, model.p * model.p) / (2.0 * model.mass);
}

double modified_kinetic_energy(const ComplexMatrix& rho, const SystemModel& model,
                               const ComplexMatrix& theta) {
  require_same_shape(rho, theta, "modified_kinetic_energy");
  return trace_product(rho, anticommutator(model.p, theta)) / (4.0 * model.mass);
}

double potential_energy(const ComplexMatrix& rho, const SystemModel& model) {
  require_same_shape(rho, model.x, "potential_energy");
  if (model.kind == ModelKind::oscillator) {
    return 0.5 * model.mass * model.omega * model.omega * trace_product(rho, model.x * model.x);
  }
  return internal_energy(rho, model.hamiltonian()) - kinetic_energy(rho, model);
}

double heat_rate(const ComplexMatrix& rho, const Liouvillian& l, const ComplexMatrix& h) {
  return trace_product(l.apply_relaxation(rho), h);
}

double work_rate(const ComplexMatrix& rho, const SystemModel& model, double force) {
  require_same_shape(rho, model.p, "work_rate");
  return force * trace_product(rho, model.p) / model.mass;
}

double entropy(const HermitianEigen& eig, double kb) {
  return entropy_from_values(eig.values, kb);
}

double entropy(const ComplexMatrix& rho, double kb) {
  return entropy(herm_eig(rho), kb);
}

double entropy_rate(const ComplexMatrix& rho, const ComplexMatrix& drho_dt, double kb) {
  require_same_shape(rho, drho_dt, "entropy_rate");
  return -kb * trace_product(drho_dt, logm_psd(rho));
}

double entropy_production_rate(const ComplexMatrix& rho, const Liouvillian& l,
                               const ComplexMatrix& log_rho_eq, double kb) {
  require_same_shape(rho, log_rho_eq, "entropy_production_rate");
  return kb * trace_product(l.apply_relaxation(rho), log_rho_eq - logm_psd(rho));
}

double entropy_flow_rate(const ComplexMatrix& rho, const Liouvillian& l, const ComplexMatrix& h,
                         double temperature) {
  return heat_rate(rho, l, h) / temperature;
}

double relative_entropy_log(const ComplexMatrix& rho1, const ComplexMatrix& log_rho2) {
  require_same_shape(rho1, log_rho2, "relative_entropy");
  return trace_product(rho1, logm_psd(rho1) - log_rho2);
}

double relative_entropy(const ComplexMatrix& rho1, const ComplexMatrix& rho2) {
  return relative_entropy_log(rho1, logm_psd(rho2));
}

double free_energy(const ComplexMatrix& rho, const Equilibrium& eq, const BathParams& bath) {
  return bath.kt() * (relative_entropy_log(rho, eq.log_rho) - eq.log_z);
}

double purity(const ComplexMatrix& rho) {
  require_square(rho, "purity");
  return rho.squaredNorm();
}

double coherence(const ComplexMatrix& rho) {
  require_square(rho, "coherence");
  ComplexMatrix off = rho;
  off.diagonal().setZero();
  return static_cast<double>(rho.rows()) * spectral_norm(off);
}

double distance(const ComplexMatrix& rho, const ComplexMatrix& rho_eq) {
  require_same_shape(rho, rho_eq, "distance");
  return spectral_norm(rho - rho_eq);
}

ThermoEvaluator::ThermoEvaluator(SystemModel model, BathParams bath, Liouvillian l,
                                 ComplexMatrix theta, double force)
    : model_(std::move(model)),
      bath_(bath),
      l_(std::move(l)),
      theta_(std::move(theta)),
      force_(force),
      eq_(canonical_state(model_, bath_)),
      h_(model_.hamiltonian()),
      p2_(model_.p * model_.p),
      x2_(model_.x * model_.x),
      p_theta_(anticommutator(model_.p, theta_)) {
  if (l_.n_levels != model_.n_levels) {
    throw DimensionError("ThermoEvaluator: Liouvillian and model dimensions differ");
  }
}

ThermoRecord ThermoEvaluator::evaluate(const ComplexMatrix& rho, double t) const {
  return evaluate(rho, herm_eig(rho), t);
}

ThermoRecord ThermoEvaluator::evaluate(const ComplexMatrix& rho, const HermitianEigen& eig,
                                       double t) const {
  require_same_shape(rho, h_, "ThermoEvaluator::evaluate");
  const double kb = bath_.kb();
  const double m = model_.mass;
  const ComplexMatrix log_rho = logm_psd(eig);
  const ComplexMatrix drho = l_.apply(rho);
  const ComplexMatrix relax = l_.apply_relaxation(rho);

  ThermoRecord r;
  r.t = t;
  r.e_total = trace_product(rho, h_);
  r.e_kin = trace_product(rho, p2_) / (2.0 * m);
  r.e_kin_mod = trace_product(rho, p_theta_) / (4.0 * m);
  if (model_.kind == ModelKind::oscillator) {
    r.e_pot = 0.5 * m * model_.omega * model_.omega * trace_product(rho, x2_);
  } else {
    r.e_pot = r.e_total - r.e_kin;
  }
  r.work_rate = force_ * trace_product(rho, model_.p) / m;
  r.heat_rate = trace_product(relax, h_);
  r.entropy = entropy(eig, kb);
  r.entropy_rate = -kb * trace_product(drho, log_rho);
  r.entropy_flow_rate = r.heat_rate / bath_.temperature();
  r.entropy_production_rate = kb * trace_product(relax, eq_.log_rho - log_rho);
  r.free_energy = bath_.kt() * (trace_product(rho, log_rho - eq_.log_rho) - eq_.log_z);
  r.purity = rho.squaredNorm();
  r.coherence = coherence(rho);
  r.distance = spectral_norm(rho - eq_.rho);
  return r;
}

}  // namespace qlangevin
