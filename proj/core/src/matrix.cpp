#include "qlangevin/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "qlangevin/errors.hpp"

namespace qlangevin {

namespace {

std::string shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() < 1 || a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         shape(a));
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& a) {
  require_square(a, "hermiticity_residual");
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double tolerance) {
  return a.rows() == a.cols() && a.rows() > 0 && hermiticity_residual(a) <= tolerance;
}

void require_hermitian(const ComplexMatrix& a, const char* what, double tolerance) {
  require_square(a, what);
  const double r = hermiticity_residual(a);
  if (r > tolerance) {
    throw SymmetryError(std::string(what) + ": matrix is not Hermitian (max |a - a†| = " +
                        std::to_string(r) + ")");
  }
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "anticommutator");
  require_same_shape(a, b, "anticommutator");
  return a * b + b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index br = b.rows();
  const Eigen::Index bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * br, j * bc, br, bc) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector vectorize(const ComplexMatrix& a) {
  ComplexVector v(a.size());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      v(i * a.cols() + j) = a(i, j);
    }
  }
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index rows, Eigen::Index cols) {
  if (rows < 1 || cols < 1 || v.size() != rows * cols) {
    throw DimensionError("unvectorize: length " + std::to_string(v.size()) +
                         " does not match " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  ComplexMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      a(i, j) = v(i * cols + j);
    }
  }
  return a;
}

ComplexMatrix left_multiplication(const ComplexMatrix& a) {
  require_square(a, "left_multiplication");
  return kron(a, ComplexMatrix::Identity(a.rows(), a.cols()));
}

ComplexMatrix right_multiplication(const ComplexMatrix& a) {
  require_square(a, "right_multiplication");
  return kron(ComplexMatrix::Identity(a.rows(), a.cols()), a.transpose());
}

ComplexMatrix commutator_superoperator(const ComplexMatrix& a) {
  return left_multiplication(a) - right_multiplication(a);
}

ComplexMatrix anticommutator_superoperator(const ComplexMatrix& a) {
  return left_multiplication(a) + right_multiplication(a);
}

ComplexMatrix expm_pade(const ComplexMatrix& a) {
  require_square(a, "expm");
  // Degree-13 diagonal Padé coefficients and the matching backward-error
  // bound on the 1-norm (Higham 2005).
  static constexpr double b[] = {64764752532480000.0,
                                 32382376266240000.0,
                                 7771770303897600.0,
                                 1187353796428800.0,
                                 129060195264000.0,
                                 10559470521600.0,
                                 670442572800.0,
                                 33522128640.0,
                                 1323241920.0,
                                 40840800.0,
                                 960960.0,
                                 16380.0,
                                 182.0,
                                 1.0};
  constexpr double theta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  if (!std::isfinite(norm1)) {
    throw NumericError("expm: input contains non-finite entries");
  }
  int squarings = 0;
  if (norm1 > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  }
  const ComplexMatrix as = a / std::ldexp(1.0, squarings);
  const Eigen::Index n = a.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  const ComplexMatrix a2 = as * as;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;

  const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
                                b[5] * a4 + b[3] * a2 + b[1] * id;
  const ComplexMatrix u = as * u_inner;
  const ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 +
                          b[2] * a2 + b[0] * id;

  Eigen::PartialPivLU<ComplexMatrix> lu(v - u);
  ComplexMatrix r = lu.solve(v + u);
  for (int k = 0; k < squarings; ++k) {
    r = r * r;
  }
  if (!r.allFinite()) {
    throw NumericError("expm: result is not finite");
  }
  return r;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& a) {
  const HermitianEigen eig = herm_eig(a);
  const ComplexVector e = eig.values.array().exp().cast<Complex>();
  return eig.vectors * e.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix expm(const ComplexMatrix& a) {
  require_square(a, "expm");
  const double scale = std::max(1.0, max_abs(a));
  if (hermiticity_residual(a) <= 8.0 * std::numeric_limits<double>::epsilon() * scale) {
    return expm_hermitian(a);
  }
  return expm_pade(a);
}

HermitianEigen herm_eig(const ComplexMatrix& a, double tolerance) {
  require_hermitian(a, "herm_eig", tolerance);
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericError("herm_eig: eigensolver did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix logm_psd(const HermitianEigen& eig, double floor) {
  if (eig.values.size() > 0 && eig.values.minCoeff() < -kNegativeEigenTolerance) {
    throw PositivityError("logm_psd: eigenvalue " + std::to_string(eig.values.minCoeff()) +
                          " is negative");
  }
  const ComplexVector l =
      eig.values.unaryExpr([floor](double x) { return std::log(std::max(x, floor)); })
          .cast<Complex>();
  return eig.vectors * l.asDiagonal() * eig.vectors.adjoint();
}

ComplexMatrix logm_psd(const ComplexMatrix& a, double floor) {
  return logm_psd(herm_eig(a), floor);
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.size() == 0) {
    return 0.0;
  }
  Eigen::BDCSVD<ComplexMatrix> svd(a);
  return svd.singularValues()(0);
}

}  // namespace qlangevin
