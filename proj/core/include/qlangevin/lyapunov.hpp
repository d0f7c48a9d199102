#pragma once

#include "qlangevin/matrix.hpp"

namespace qlangevin {

struct LyapunovOptions {
  // A pair (i, j) is rejected when |λi + λj| <= tolerance * max|λ|.
  // Zero only rejects exact cancellation.
  double tolerance = 1e-12;
};

/// Solves A X + X A = C through the vectorized system (A⊗I + I⊗Aᵀ) vec X = vec C.
/// Throws SolverError naming the eigenvalue pair that violates solvability.
ComplexMatrix lyapunov_solve(const ComplexMatrix& a, const ComplexMatrix& c,
                             const LyapunovOptions& options = {});

/// X = -∫₀^∞ e^{At} C e^{At} dt, evaluated in the eigenbasis of A.
/// Requires every eigenvalue of A to have a negative real part.
ComplexMatrix lyapunov_integral_solution(const ComplexMatrix& a, const ComplexMatrix& c);

}  // namespace qlangevin
