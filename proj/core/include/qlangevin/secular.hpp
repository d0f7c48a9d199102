#pragma once

#include <cstddef>
#include <vector>

#include "qlangevin/friction.hpp"
#include "qlangevin/matrix.hpp"
#include "qlangevin/models.hpp"

namespace qlangevin {

// Γ⁻_abcd = c x_ab x_cd e^{Δ_ab}/cosh Δ_ab,  Γ⁺_abcd = c x_ab x_cd e^{Δ_dc}/cosh Δ_dc,
// with c = kB T β m/ħ² and Δ_ab = (E_a - E_b)/(2 kB T).
class GammaTensors {
 public:
  GammaTensors(const SystemModel& model, const BathParams& bath);

  std::size_t n() const { return n_; }
  Complex plus(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;
  Complex minus(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const;

 private:
  std::size_t n_;
  double c_;
  ComplexMatrix x_;
  RealMatrix weight_;  // e^{Δ_ab}/cosh Δ_ab
};

inline GammaTensors gamma_tensors(const SystemModel& model, const BathParams& bath) {
  return GammaTensors(model, bath);
}

/// R_nmij = -δ_mj Σ_q Γ⁺_nqqi + Γ⁺_jmni + Γ⁻_jmni - δ_ni Σ_p Γ⁻_jppm, laid out
/// like Liouvillian::relaxation (row n*N + m, column i*N + j).
ComplexMatrix relaxation_from_gamma(const GammaTensors& g);

/// Golden-rule rates in the closed form W_ni = c|x_ni|² e^{Δ_in}/cosh Δ_in,
/// Δ_in = (E_i - E_n)/(2 kB T), zero diagonal.
///
/// The population block of the relaxation tensor is Γ⁺_inni + Γ⁻_inni, which
/// is exactly twice this value; population_rates() returns that block.
RealMatrix pauli_rates(const SystemModel& model, const BathParams& bath);

/// W_ni = R_nnii for n ≠ i: the rates that drive populations under the
/// full relaxation operator. Equal to 2 · pauli_rates.
RealMatrix population_rates(const SystemModel& model, const BathParams& bath);

/// γ_nm = Σ_q Γ⁺_nqqn - Γ⁺_mmnn - Γ⁻_mmnn + Σ_p Γ⁻_mppm (zero diagonal).
RealMatrix decoherence_rates(const SystemModel& model, const BathParams& bath);

/// max |W_ni e^{-E_i/kT} - W_in e^{-E_n/kT}| with energies shifted to E_0 = 0.
double detailed_balance_residual(const RealMatrix& w, const SystemModel& model,
                                 const BathParams& bath);

/// e^{-E/kT}/Z
RealVector canonical_populations(const SystemModel& model, const BathParams& bath);

/// dP_n/dt = Σ_i W_ni P_i - (Σ_q W_qn) P_n as a matrix.
RealMatrix pauli_generator(const RealMatrix& w);

/// Populations at steps 0..steps, propagated with exp(G dt).
std::vector<RealVector> pauli_evolve(const RealVector& populations, const RealMatrix& w,
                                     double dt, std::size_t steps);

/// (kB/2) Σ_{n≠i} (W_ni P_i - W_in P_n) ln[(W_ni P_i)/(W_in P_n)].
double schnakenberg(const RealVector& populations, const RealMatrix& w, double kb = 1.0);

}  // namespace qlangevin
