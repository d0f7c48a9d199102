#include "qlangevin/secular.hpp"

#include <cmath>
#include <string>

#include "qlangevin/errors.hpp"

namespace qlangevin {

namespace {

// e^{Δ}/cosh Δ = 2/(1 + e^{-2Δ}); stays accurate when tanh Δ rounds to -1.
double boltzmann_weight(double delta) {
  return 2.0 / (1.0 + std::exp(-2.0 * delta));
}

constexpr double kPopulationTolerance = 1e-10;

void check_rates(const RealMatrix& w, Eigen::Index n, const char* what) {
  if (w.rows() != n || w.cols() != n) {
    throw DimensionError(std::string(what) + ": rate matrix does not match populations");
  }
}

}  // namespace

GammaTensors::GammaTensors(const SystemModel& model, const BathParams& bath)
    : n_(model.n_levels),
      c_(bath.kt() * bath.beta() * model.mass / (model.hbar * model.hbar)),
      x_(model.x) {
  const auto n = static_cast<Eigen::Index>(n_);
  weight_.resize(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      weight_(a, b) = boltzmann_weight((model.energies(a) - model.energies(b)) / (2.0 * bath.kt()));
    }
  }
}

Complex GammaTensors::minus(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
  const auto ia = static_cast<Eigen::Index>(a);
  const auto ib = static_cast<Eigen::Index>(b);
  return c_ * x_(ia, ib) * x_(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(d)) *
         weight_(ia, ib);
}

Complex GammaTensors::plus(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
  const auto ic = static_cast<Eigen::Index>(c);
  const auto id = static_cast<Eigen::Index>(d);
  return c_ * x_(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * x_(ic, id) *
         weight_(id, ic);
}

ComplexMatrix relaxation_from_gamma(const GammaTensors& g) {
  const std::size_t n = g.n();
  const auto nn = static_cast<Eigen::Index>(n * n);
  ComplexMatrix r = ComplexMatrix::Zero(nn, nn);
  // Σ_q Γ⁺_nqqi and Σ_p Γ⁻_jppm depend on two indices only.
  ComplexMatrix sum_plus = ComplexMatrix::Zero(static_cast<Eigen::Index>(n),
                                               static_cast<Eigen::Index>(n));
  ComplexMatrix sum_minus = sum_plus;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t q = 0; q < n; ++q) {
        sum_plus(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) += g.plus(a, q, q, b);
        sum_minus(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
            g.minus(a, q, q, b);
      }
    }
  }
  for (std::size_t nl = 0; nl < n; ++nl) {
    for (std::size_t m = 0; m < n; ++m) {
      const auto row = static_cast<Eigen::Index>(nl * n + m);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Complex v = g.plus(j, m, nl, i) + g.minus(j, m, nl, i);
          if (m == j) {
            v -= sum_plus(static_cast<Eigen::Index>(nl), static_cast<Eigen::Index>(i));
          }
          if (nl == i) {
            v -= sum_minus(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(m));
          }
          r(row, static_cast<Eigen::Index>(i * n + j)) = v;
        }
      }
    }
  }
  return r;
}

RealMatrix pauli_rates(const SystemModel& model, const BathParams& bath) {
  const auto n = static_cast<Eigen::Index>(model.n_levels);
  const double c = bath.kt() * bath.beta() * model.mass / (model.hbar * model.hbar);
  RealMatrix w = RealMatrix::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a == i) {
        continue;
      }
      const double delta = (model.energies(i) - model.energies(a)) / (2.0 * bath.kt());
      w(a, i) = c * std::norm(model.x(a, i)) * boltzmann_weight(delta);
    }
  }
  return w;
}

RealMatrix population_rates(const SystemModel& model, const BathParams& bath) {
  const GammaTensors g(model, bath);
  const std::size_t n = model.n_levels;
  RealMatrix w = RealMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < n; ++i) {
      if (a != i) {
        w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(i)) =
            (g.plus(i, a, a, i) + g.minus(i, a, a, i)).real();
      }
    }
  }
  return w;
}

RealMatrix decoherence_rates(const SystemModel& model, const BathParams& bath) {
  const GammaTensors g(model, bath);
  const std::size_t n = model.n_levels;
  RealMatrix gamma = RealMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t m = 0; m < n; ++m) {
      if (a == m) {
        continue;
      }
      Complex v = -g.plus(m, m, a, a) - g.minus(m, m, a, a);
      for (std::size_t q = 0; q < n; ++q) {
        v += g.plus(a, q, q, a) + g.minus(m, q, q, m);
      }
      gamma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(m)) = v.real();
    }
  }
  return gamma;
}

RealVector canonical_populations(const SystemModel& model, const BathParams& bath) {
  const double e0 = model.energies.minCoeff();
  RealVector w = ((model.energies.array() - e0) / -bath.kt()).exp();
  return w / w.sum();
}

double detailed_balance_residual(const RealMatrix& w, const SystemModel& model,
                                 const BathParams& bath) {
  const auto n = static_cast<Eigen::Index>(model.n_levels);
  check_rates(w, n, "detailed_balance_residual");
  const double e0 = model.energies.minCoeff();
  const RealVector b = ((model.energies.array() - e0) / -bath.kt()).exp();
  double r = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) {
      r = std::max(r, std::abs(w(a, i) * b(i) - w(i, a) * b(a)));
    }
  }
  return r;
}

RealMatrix pauli_generator(const RealMatrix& w) {
  if (w.rows() != w.cols()) {
    throw DimensionError("pauli_generator: rate matrix must be square");
  }
  RealMatrix g = w;
  g.diagonal().setZero();
  const RealVector out = g.colwise().sum().transpose();
  g.diagonal() = -out;
  return g;
}

std::vector<RealVector> pauli_evolve(const RealVector& populations, const RealMatrix& w,
                                     double dt, std::size_t steps) {
  check_rates(w, populations.size(), "pauli_evolve");
  if (populations.size() < 1 || populations.minCoeff() < 0.0) {
    throw DomainError("pauli_evolve: populations must be non-negative");
  }
  if (std::abs(populations.sum() - 1.0) > kPopulationTolerance) {
    throw DomainError("pauli_evolve: populations must sum to 1");
  }
  if (!(dt > 0.0)) {
    throw ParameterError("pauli_evolve: dt must be positive");
  }
  const RealMatrix step =
      expm(ComplexMatrix(pauli_generator(w).cast<Complex>() * dt)).real();
  std::vector<RealVector> out;
  out.reserve(steps + 1);
  out.push_back(populations);
  for (std::size_t k = 0; k < steps; ++k) {
    out.push_back(step * out.back());
  }
  return out;
}

double schnakenberg(const RealVector& populations, const RealMatrix& w, double kb) {
  const Eigen::Index n = populations.size();
  check_rates(w, n, "schnakenberg");
  double s = 0.0;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (a == i || (w(a, i) == 0.0 && w(i, a) == 0.0)) {
        continue;
      }
      const double forward = w(a, i) * populations(i);
      const double backward = w(i, a) * populations(a);
      if (!(forward > 0.0) || !(backward > 0.0)) {
        throw DomainError("schnakenberg: zero flux on a connected edge (" + std::to_string(a) +
                          ", " + std::to_string(i) + ")");
      }
      s += (forward - backward) * std::log(forward / backward);
    }
  }
  return 0.5 * kb * s;
}

}  // namespace qlangevin
