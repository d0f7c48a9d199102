#include "qlangevin/friction.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qlangevin/errors.hpp"
#include "qlangevin/lyapunov.hpp"

namespace qlangevin {

namespace {

constexpr double pi = std::numbers::pi;

double log_coth(double x) {
  return std::log1p(2.0 / std::expm1(2.0 * x));
}

void check_model(const SystemModel& model, const char* what) {
  require_square(model.x, what);
  require_same_shape(model.x, model.p, what);
  if (model.energies.size() != model.x.rows()) {
    throw DimensionError(std::string(what) + ": energy vector does not match x");
  }
}

}  // namespace

const char* to_string(Variant v) {
  return v == Variant::proposed ? "proposed" : "caldeira_leggett";
}

const char* to_string(ThetaRoute r) {
  switch (r) {
    case ThetaRoute::energy_basis:
      return "energy_basis";
    case ThetaRoute::lyapunov:
      return "lyapunov";
    case ThetaRoute::quadrature:
      return "quadrature";
    case ThetaRoute::series:
      return "series";
  }
  return "unknown";
}

BathParams::BathParams(double temperature, double beta, double kb, double alpha, Variant variant)
    : temperature_(temperature), beta_(beta), kb_(kb), alpha_(alpha), variant_(variant) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw ParameterError("temperature must be positive, got " + std::to_string(temperature));
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ParameterError("beta must be non-negative, got " + std::to_string(beta));
  }
  if (!(kb > 0.0) || !std::isfinite(kb)) {
    throw ParameterError("kb must be positive, got " + std::to_string(kb));
  }
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw ParameterError("alpha must lie in (0, 1], got " + std::to_string(alpha) +
                         "; alpha = 0 (Ito) cancels the noise and is excluded");
  }
}

BathParams BathParams::with_variant(Variant v) const {
  return BathParams(temperature_, beta_, kb_, alpha_, v);
}

double friction_factor(double delta) {
  const double d2 = delta * delta;
  if (d2 < 1e-8) {
    return 1.0 - d2 / 3.0 + 2.0 * d2 * d2 / 15.0;
  }
  return std::tanh(delta) / delta;
}

ComplexMatrix theta_energy_basis(const SystemModel& model, const BathParams& bath) {
  check_model(model, "theta_energy_basis");
  const Eigen::Index n = model.x.rows();
  ComplexMatrix theta(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double delta = (model.energies(l) - model.energies(j)) / (2.0 * bath.kt());
      theta(l, j) = model.p(l, j) * friction_factor(delta);
    }
  }
  return theta;
}

ComplexMatrix theta_lyapunov(const SystemModel& model, const BathParams& bath) {
  check_model(model, "theta_lyapunov");
  // Shifting by the ground energy only rescales both sides.
  const double e0 = model.energies.minCoeff();
  const RealVector w = ((model.energies.array() - e0) / -bath.kt()).exp();
  const ComplexMatrix e = w.cast<Complex>().asDiagonal();
  const Complex factor(0.0, 2.0 * model.mass * bath.kt() / model.hbar);
  const ComplexMatrix rhs = factor * commutator(model.x, e);
  // e spans many decades on the well, so only an exact cancellation is
  // rejected; e is positive definite and the system is always solvable.
  return lyapunov_solve(e, rhs, LyapunovOptions{0.0});
}

double quadrature_kernel(double omega, const QuadratureConfig& quad) {
  using boost::math::quadrature::gauss_kronrod;
  const double rel = quad.tolerance * 1e-2;

  auto near = [omega](double u) {
    const double eta = std::exp(-u);
    return std::cos(omega * eta) * log_coth(pi * eta / 2.0) * eta;
  };
  auto far = [omega](double eta) {
    return std::cos(omega * eta) * log_coth(pi * eta / 2.0);
  };
  const double u_split = -std::log(quad.split);
  double err_near = 0.0;
  double err_far = 0.0;
  const double i_near = gauss_kronrod<double, 31>::integrate(near, u_split, quad.u_max,
                                                             quad.max_depth, rel, &err_near);
  const double i_far = gauss_kronrod<double, 31>::integrate(far, quad.split, quad.eta_max,
                                                            quad.max_depth, rel, &err_far);
  const double err = 4.0 / pi * (err_near + err_far);
  if (!(err <= quad.tolerance)) {
    std::ostringstream msg;
    msg << "quadrature_kernel: error estimate " << err << " exceeds tolerance "
        << quad.tolerance << " at omega = " << omega;
    throw AccuracyError(msg.str());
  }
  return 4.0 / pi * (i_near + i_far);
}

double log_coth_weight_integral(const QuadratureConfig& quad) {
  return quadrature_kernel(0.0, quad);
}

ComplexMatrix theta_quadrature(const SystemModel& model, const BathParams& bath,
                               const QuadratureConfig& quad) {
  check_model(model, "theta_quadrature");
  const Eigen::Index n = model.x.rows();
  std::map<double, double> cache;
  ComplexMatrix theta = ComplexMatrix::Zero(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (model.p(l, j) == Complex(0.0, 0.0)) {
        continue;
      }
      // The weight is even in η, so only |ω| matters.
      const double omega = std::abs(model.energies(l) - model.energies(j)) / bath.kt();
      auto it = cache.find(omega);
      if (it == cache.end()) {
        it = cache.emplace(omega, quadrature_kernel(omega, quad)).first;
      }
      theta(l, j) = model.p(l, j) * it->second;
    }
  }
  return theta;
}

SeriesResult theta_series(const SystemModel& model, const BathParams& bath, unsigned order) {
  check_model(model, "theta_series");
  if (order > kMaxSeriesOrder) {
    throw ParameterError("theta_series: order " + std::to_string(order) + " exceeds " +
                         std::to_string(kMaxSeriesOrder));
  }
  const Eigen::Index n = model.x.rows();
  SeriesResult out;
  for (Eigen::Index l = 0; l < n; ++l) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (model.p(l, j) != Complex(0.0, 0.0)) {
        const double r = std::abs(model.energies(l) - model.energies(j)) / (2.0 * bath.kt());
        out.max_ratio = std::max(out.max_ratio, r);
      }
    }
  }
  out.divergent = out.max_ratio >= pi / 2.0;

  const ComplexMatrix h = model.hamiltonian();
  ComplexMatrix nested = model.p;
  out.theta = model.p;
  const double kt2 = bath.kt() * bath.kt();
  double scale = 1.0;      // (kB T)^{-2k}
  double factorial = 2.0;  // (2k+2)!
  for (unsigned k = 1; k <= order; ++k) {
    nested = commutator(h, commutator(h, nested));
    scale /= kt2;
    const unsigned m = 2 * k + 2;
    factorial *= static_cast<double>(m - 1) * static_cast<double>(m);
    const double coeff = 4.0 * (std::ldexp(1.0, static_cast<int>(m)) - 1.0) *
                         bernoulli_number(m) / factorial;
    out.theta += (coeff * scale) * nested;
  }
  return out;
}

ComplexMatrix theta_position_form(const SystemModel& model, const BathParams& bath) {
  check_model(model, "theta_position_form");
  const Eigen::Index n = model.x.rows();
  const Complex factor(0.0, 2.0 * model.mass * bath.kt() / model.hbar);
  ComplexMatrix theta(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const double delta = (model.energies(a) - model.energies(b)) / (2.0 * bath.kt());
      theta(a, b) = factor * model.x(a, b) * std::tanh(delta);
    }
  }
  return theta;
}

ComplexMatrix friction_operator(const SystemModel& model, const BathParams& bath,
                                ThetaRoute route, unsigned series_order) {
  if (bath.variant() == Variant::caldeira_leggett) {
    return model.p;
  }
  switch (route) {
    case ThetaRoute::energy_basis:
      return theta_energy_basis(model, bath);
    case ThetaRoute::lyapunov:
      return theta_lyapunov(model, bath);
    case ThetaRoute::quadrature:
      return theta_quadrature(model, bath);
    case ThetaRoute::series:
      return theta_series(model, bath, series_order).theta;
  }
  throw ParameterError("friction_operator: unknown route");
}

double stationarity_residual(const SystemModel& model, const BathParams& bath,
                             const ComplexMatrix& theta) {
  check_model(model, "stationarity_residual");
  require_same_shape(model.x, theta, "stationarity_residual");
  const double e0 = model.energies.minCoeff();
  RealVector w = ((model.energies.array() - e0) / -bath.kt()).exp();
  w /= w.sum();
  const ComplexMatrix rho = w.cast<Complex>().asDiagonal();
  const Complex factor(0.0, 2.0 * model.mass * bath.kt() / model.hbar);
  return max_abs(anticommutator(theta, rho) - factor * commutator(model.x, rho));
}

}  // namespace qlangevin
