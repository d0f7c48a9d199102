#pragma once

// Random inputs for property tests. Every generator takes the engine by
// reference so a test controls the whole stream through one seed.

#include <cmath>
#include <cstdint>
#include <random>

#include "qlangevin/matrix.hpp"

namespace qlangevin::gen {

using Rng = std::mt19937_64;

inline ComplexMatrix random_rect(Rng& rng, Eigen::Index rows, Eigen::Index cols,
                                 double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Complex(g(rng), g(rng));
    }
  }
  return m;
}

inline ComplexMatrix random_matrix(Rng& rng, Eigen::Index n, double scale = 1.0) {
  return random_rect(rng, n, n, scale);
}

inline ComplexMatrix random_hermitian(Rng& rng, Eigen::Index n, double scale = 1.0) {
  const ComplexMatrix a = random_matrix(rng, n, scale);
  return 0.5 * (a + a.adjoint());
}

// Full-rank density matrix; `floor` keeps the smallest eigenvalue away from 0.
inline ComplexMatrix random_density(Rng& rng, Eigen::Index n, double floor = 1e-3) {
  const ComplexMatrix a = random_matrix(rng, n);
  ComplexMatrix rho = a * a.adjoint() + floor * ComplexMatrix::Identity(n, n);
  rho = 0.5 * (rho + rho.adjoint());
  return rho / rho.trace().real();
}

// Eigenvalues with real parts in [-hi, -lo].
inline ComplexMatrix random_stable(Rng& rng, Eigen::Index n, double lo = 0.5, double hi = 3.0) {
  std::uniform_real_distribution<double> re(lo, hi);
  std::normal_distribution<double> im(0.0, 1.0);
  ComplexVector d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i) = Complex(-re(rng), im(rng));
  }
  // Well-conditioned similarity: identity plus a small perturbation.
  const ComplexMatrix v = ComplexMatrix::Identity(n, n) + 0.3 * random_matrix(rng, n);
  return v * d.asDiagonal() * v.inverse();
}

inline int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double random_real(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace qlangevin::gen
