#pragma once

// Dense complex linear algebra used by every other module.
//
// Vectorization is ROW-MAJOR throughout: vec(A) stacks the rows of A. With
// this convention
//   vec(A B C) = (A ⊗ I)(I ⊗ Cᵀ) vec(B),
// so a left multiplication becomes `A ⊗ I` and a right multiplication
// becomes `I ⊗ Cᵀ`.  All superoperators in the library follow it.

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qlangevin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kNegativeEigenTolerance = 1e-10;
inline constexpr double kLogFloor = 1e-14;

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector vectorize(const ComplexMatrix& a);
ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols);

// Superoperators (acting on row-major vec) for rho -> a rho, rho -> rho a,
// rho -> [a, rho] and rho -> {a, rho}.
ComplexMatrix left_multiplication(const ComplexMatrix& a);
ComplexMatrix right_multiplication(const ComplexMatrix& a);
ComplexMatrix commutator_superoperator(const ComplexMatrix& a);
ComplexMatrix anticommutator_superoperator(const ComplexMatrix& a);

/// Matrix exponential. Hermitian inputs go through the eigendecomposition;
/// everything else through scaling and squaring with a degree-13 Padé
/// approximant.
ComplexMatrix expm(const ComplexMatrix& a);
ComplexMatrix expm_pade(const ComplexMatrix& a);
ComplexMatrix expm_hermitian(const ComplexMatrix& a);

struct HermitianEigen {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // unitary, columns are eigenvectors
};

/// Throws SymmetryError if max|a - a†| exceeds `tolerance`.
HermitianEigen herm_eig(const ComplexMatrix& a, double tolerance = kHermitianTolerance);

/// Spectral logarithm of a positive semidefinite matrix. Eigenvalues below
/// `floor` are clamped to `floor` before the log is taken.
ComplexMatrix logm_psd(const ComplexMatrix& a, double floor = kLogFloor);
ComplexMatrix logm_psd(const HermitianEigen& eig, double floor = kLogFloor);

/// Largest singular value.
double spectral_norm(const ComplexMatrix& a);

double hermiticity_residual(const ComplexMatrix& a);
bool is_hermitian(const ComplexMatrix& a, double tolerance = kHermitianTolerance);
double max_abs(const ComplexMatrix& a);

void require_square(const ComplexMatrix& a, const char* what);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what);
void require_hermitian(const ComplexMatrix& a, const char* what,
                       double tolerance = kHermitianTolerance);

}  // namespace qlangevin
