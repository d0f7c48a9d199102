#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qlangevin/lyapunov.hpp"
#include "qlangevin/matrix.hpp"

namespace qlangevin {

// dy = C y dt + Σ_j D_j y ∘ dW_j in the α-interpretation, with
// E{dW dW} = 2 dt.
struct GBMSystem {
  ComplexMatrix drift;
  std::vector<ComplexMatrix> noise;
  double alpha = 0.5;

  /// C + 2α Σ D_j², the generator of the mean.
  ComplexMatrix mean_generator() const;
  void validate() const;
};

/// E{y}(t) = exp((C + 2α Σ D_j²) t) y0
ComplexVector mean_ode_solution(const GBMSystem& sys, const ComplexVector& y0, double t);

struct TrajectoryStatistics {
  std::vector<double> times;
  std::vector<ComplexVector> mean;
  // Standard error of the mean, real and imaginary parts separately.
  std::vector<ComplexVector> std_error;
  std::size_t n_traj = 0;
};

/// Euler-Maruyama on the equivalent Itô equation
///   dy = (C + 2α Σ D_j²) y dt + Σ D_j y dW_j,  dW_j ~ N(0, 2 dt).
/// Trajectory k draws from its own generator seeded by (seed, k), so the
/// output depends only on the arguments.
TrajectoryStatistics simulate_trajectories(const GBMSystem& sys, const ComplexVector& y0,
                                           double dt, std::size_t steps, std::size_t n_traj,
                                           std::uint64_t seed);

/// [[R, -M], [M, R]] for A = R + iM.
RealMatrix decomplexify(const ComplexMatrix& a);

struct NormDecay {
  std::vector<double> times;
  std::vector<double> norms;        // ‖E{Ψ}‖²
  std::vector<double> rates;        // -(4α/ħ²) Σ ‖A_k E{Ψ}‖²
  std::vector<double> derivatives;  // 2 Re⟨Ψ, G Ψ⟩
};

/// Averaged wavefunction under dΨ/dt = (1/iħ)H Ψ - (2α/ħ²) Σ A_k² Ψ,
/// propagated exactly from t = 0 to each grid time.
NormDecay norm_decay_demo(const ComplexMatrix& h0, const std::vector<ComplexMatrix>& a,
                          double alpha, const ComplexVector& psi0,
                          const std::vector<double>& t_grid, double hbar = 1.0);

}  // namespace qlangevin
