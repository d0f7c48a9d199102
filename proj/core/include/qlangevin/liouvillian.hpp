#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qlangevin/friction.hpp"
#include "qlangevin/matrix.hpp"
#include "qlangevin/models.hpp"

namespace qlangevin {

// Superoperator of
//   dρ/dt = (1/iħ)[H, ρ] - (f/iħ)[x, ρ] - (kB T β m/ħ²)[x, [x, ρ]]
//           + (β/2iħ)[x, Θρ + ρΘ]
// acting on row-major vec(ρ). Entry [i*N + j, r*N + s] is L_ijrs.
struct Liouvillian {
  ComplexMatrix full;
  ComplexMatrix relaxation;  // noise and friction terms
  ComplexMatrix hamiltonian_part;
  ComplexMatrix force_part;
  Variant variant = Variant::proposed;
  std::size_t n_levels = 0;

  ComplexMatrix apply(const ComplexMatrix& rho) const;
  ComplexMatrix apply_relaxation(const ComplexMatrix& rho) const;
};

Liouvillian assemble(const SystemModel& model, const BathParams& bath, const ComplexMatrix& theta,
                     double force = 0.0);

struct ConstraintCheck {
  std::string name;
  double violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;  // trace, hermiticity, diagonal, cross
  bool all_passed() const;
  double max_violation() const;
};

/// Trace preservation Σ_i L_iirs = 0; Hermiticity preservation
/// L_jisr = conj(L_ijrs); Re L_iiii ≤ 0; Re L_jjii ≥ 0 for j ≠ i.
ConstraintReport check_constraints(const Liouvillian& l, double tolerance = 1e-12);

}  // namespace qlangevin
