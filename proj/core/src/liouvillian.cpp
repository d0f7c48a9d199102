#include "qlangevin/liouvillian.hpp"

#include <algorithm>
#include <complex>

#include "qlangevin/errors.hpp"

namespace qlangevin {

ComplexMatrix Liouvillian::apply(const ComplexMatrix& rho) const {
  const auto n = static_cast<Eigen::Index>(n_levels);
  require_same_shape(rho, ComplexMatrix(n, n), "Liouvillian::apply");
  return unvectorize(full * vectorize(rho), n, n);
}

ComplexMatrix Liouvillian::apply_relaxation(const ComplexMatrix& rho) const {
  const auto n = static_cast<Eigen::Index>(n_levels);
  require_same_shape(rho, ComplexMatrix(n, n), "Liouvillian::apply_relaxation");
  return unvectorize(relaxation * vectorize(rho), n, n);
}

Liouvillian assemble(const SystemModel& model, const BathParams& bath, const ComplexMatrix& theta,
                     double force) {
  require_square(model.x, "assemble");
  require_same_shape(model.x, model.p, "assemble");
  require_same_shape(model.x, theta, "assemble");
  if (model.energies.size() != model.x.rows()) {
    throw DimensionError("assemble: energy vector does not match x");
  }
  require_hermitian(theta, "assemble theta");

  const Complex inv_ih = 1.0 / Complex(0.0, model.hbar);
  const ComplexMatrix ad_x = commutator_superoperator(model.x);
  const double noise = bath.kt() * bath.beta() * model.mass / (model.hbar * model.hbar);

  Liouvillian l;
  l.variant = bath.variant();
  l.n_levels = static_cast<std::size_t>(model.x.rows());
  l.hamiltonian_part = inv_ih * commutator_superoperator(model.hamiltonian());
  l.force_part = (-force * inv_ih) * ad_x;
  l.relaxation = -noise * (ad_x * ad_x) +
                 (0.5 * bath.beta() * inv_ih) * (ad_x * anticommutator_superoperator(theta));
  l.full = l.hamiltonian_part + l.force_part + l.relaxation;
  return l;
}

bool ConstraintReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

double ConstraintReport::max_violation() const {
  double v = 0.0;
  for (const auto& c : checks) {
    v = std::max(v, c.violation);
  }
  return v;
}

ConstraintReport check_constraints(const Liouvillian& l, double tolerance) {
  const auto n = static_cast<Eigen::Index>(l.n_levels);
  const ComplexMatrix& m = l.full;
  if (m.rows() != n * n || m.cols() != n * n) {
    throw DimensionError("check_constraints: superoperator does not match n_levels");
  }
  auto at = [&m, n](Eigen::Index i, Eigen::Index j, Eigen::Index r, Eigen::Index s) {
    return m(i * n + j, r * n + s);
  };

  double trace = 0.0;
  double herm = 0.0;
  double diag = 0.0;
  double cross = 0.0;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index s = 0; s < n; ++s) {
      Complex sum(0.0, 0.0);
      for (Eigen::Index i = 0; i < n; ++i) {
        sum += at(i, i, r, s);
      }
      trace = std::max(trace, std::abs(sum));
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
          herm = std::max(herm, std::abs(std::conj(at(i, j, r, s)) - at(j, i, s, r)));
        }
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex v = at(j, j, i, i);
      if (i == j) {
        diag = std::max({diag, v.real(), std::abs(v.imag())});
      } else {
        cross = std::max({cross, -v.real(), std::abs(v.imag())});
      }
    }
  }

  ConstraintReport report;
  auto add = [&report, tolerance](const char* name, double violation) {
    report.checks.push_back({name, violation, tolerance, violation <= tolerance});
  };
  add("trace_preservation", trace);
  add("hermiticity_preservation", herm);
  add("diagonal_nonpositive", std::max(diag, 0.0));
  add("cross_nonnegative", std::max(cross, 0.0));
  return report;
}

}  // namespace qlangevin
