#include "qlangevin/lyapunov.hpp"

#include <algorithm>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qlangevin/errors.hpp"

namespace qlangevin {

namespace {

ComplexVector eigenvalues_of(const ComplexMatrix& a) {
  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a, false);
  if (solver.info() != Eigen::Success) {
    throw NumericError("lyapunov: eigensolver did not converge");
  }
  return solver.eigenvalues();
}

}  // namespace

ComplexMatrix lyapunov_solve(const ComplexMatrix& a, const ComplexMatrix& c,
                             const LyapunovOptions& options) {
  require_square(a, "lyapunov_solve");
  require_same_shape(a, c, "lyapunov_solve");

  const ComplexVector lambda = eigenvalues_of(a);
  const double scale = lambda.cwiseAbs().maxCoeff();
  const Eigen::Index n = lambda.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double s = std::abs(lambda(i) + lambda(j));
      if (s <= options.tolerance * scale) {
        std::ostringstream msg;
        msg << "lyapunov_solve: eigenvalues " << i << " and " << j << " (" << lambda(i)
            << ", " << lambda(j) << ") sum to zero; the equation has no unique solution";
        throw SolverError(msg.str());
      }
    }
  }

  const ComplexMatrix op = left_multiplication(a) + right_multiplication(a);
  Eigen::PartialPivLU<ComplexMatrix> lu(op);
  const ComplexVector x = lu.solve(vectorize(c));
  if (!x.allFinite()) {
    throw SolverError("lyapunov_solve: solution is not finite");
  }
  return unvectorize(x, n, n);
}

ComplexMatrix lyapunov_integral_solution(const ComplexMatrix& a, const ComplexMatrix& c) {
  require_square(a, "lyapunov_integral_solution");
  require_same_shape(a, c, "lyapunov_integral_solution");

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw NumericError("lyapunov_integral_solution: eigensolver did not converge");
  }
  const ComplexVector& lambda = solver.eigenvalues();
  if (lambda.real().maxCoeff() >= 0.0) {
    throw DomainError("lyapunov_integral_solution: A is not stable (max Re λ = " +
                      std::to_string(lambda.real().maxCoeff()) + ")");
  }
  const ComplexMatrix& v = solver.eigenvectors();
  Eigen::PartialPivLU<ComplexMatrix> vlu(v);
  ComplexMatrix ct = vlu.solve(c * v);  // V⁻¹ C V
  // ∫₀^∞ e^{(λi+λj)t} dt = -1/(λi+λj); the leading minus sign cancels it.
  for (Eigen::Index i = 0; i < ct.rows(); ++i) {
    for (Eigen::Index j = 0; j < ct.cols(); ++j) {
      ct(i, j) /= lambda(i) + lambda(j);
    }
  }
  return v * ct * vlu.inverse();
}

}  // namespace qlangevin
