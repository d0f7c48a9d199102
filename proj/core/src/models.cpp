#include "qlangevin/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qlangevin/errors.hpp"

namespace qlangevin {

namespace {

constexpr double kLinkTolerance = 1e-12;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string(name) + " must be a finite positive number, got " +
                         std::to_string(v));
  }
}

void require_levels(std::size_t n) {
  if (n < 2) {
    throw ParameterError("n_levels must be at least 2, got " + std::to_string(n));
  }
}

void verify_link(const SystemModel& m) {
  // Relative to the size of p: the well's momentum elements grow like N.
  const double scale = std::max(1.0, max_abs(m.p));
  const double r = momentum_link_residual(m);
  if (r > kLinkTolerance * scale) {
    throw NumericError("model construction: p != (m/i hbar)[x, H], residual " +
                       std::to_string(r));
  }
}

}  // namespace

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::oscillator:
      return "oscillator";
    case ModelKind::well:
      return "well";
    case ModelKind::custom:
      return "custom";
  }
  return "unknown";
}

ComplexMatrix SystemModel::hamiltonian() const {
  return energies.cast<Complex>().asDiagonal();
}

double momentum_link_residual(const SystemModel& model) {
  const Complex factor = model.mass / Complex(0.0, model.hbar);
  const ComplexMatrix link = factor * commutator(model.x, model.hamiltonian());
  return max_abs(model.p - link);
}

SystemModel build_oscillator(std::size_t n_levels, double mass, double omega, double hbar) {
  require_levels(n_levels);
  require_positive(mass, "mass");
  require_positive(omega, "omega");
  require_positive(hbar, "hbar");

  const auto n = static_cast<Eigen::Index>(n_levels);
  SystemModel m;
  m.kind = ModelKind::oscillator;
  m.n_levels = n_levels;
  m.mass = mass;
  m.omega = omega;
  m.hbar = hbar;
  m.energies.resize(n);
  m.x = ComplexMatrix::Zero(n, n);
  m.p = ComplexMatrix::Zero(n, n);

  const double xs = std::sqrt(hbar / (2.0 * mass * omega));
  const double ps = std::sqrt(mass * omega * hbar / 2.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    m.energies(k) = hbar * omega * (static_cast<double>(k) + 0.5);
  }
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    const double s = std::sqrt(static_cast<double>(k + 1));
    m.x(k, k + 1) = xs * s;
    m.x(k + 1, k) = xs * s;
    m.p(k, k + 1) = Complex(0.0, -ps * s);
    m.p(k + 1, k) = Complex(0.0, ps * s);
  }
  verify_link(m);
  return m;
}

SystemModel build_well(std::size_t n_levels, double mass, double length, double hbar) {
  require_levels(n_levels);
  require_positive(mass, "mass");
  require_positive(length, "length");
  require_positive(hbar, "hbar");

  constexpr double pi = std::numbers::pi;
  const auto n = static_cast<Eigen::Index>(n_levels);
  SystemModel m;
  m.kind = ModelKind::well;
  m.n_levels = n_levels;
  m.mass = mass;
  m.length = length;
  m.hbar = hbar;
  m.energies.resize(n);
  m.x = ComplexMatrix::Zero(n, n);
  m.p = ComplexMatrix::Zero(n, n);

  for (Eigen::Index a = 0; a < n; ++a) {
    const double qa = static_cast<double>(a + 1);
    m.energies(a) = pi * pi * hbar * hbar * qa * qa / (2.0 * mass * length * length);
    for (Eigen::Index b = 0; b < n; ++b) {
      if (a == b) {
        m.x(a, b) = length / 2.0;
        continue;
      }
      const double qb = static_cast<double>(b + 1);
      // (-1)^m cos(n pi) = (-1)^(n+m): the bracket is -2 for odd n+m, else 0.
      // Parity of n+m is the same for 1-based and 0-based indices.
      const double bracket = ((a + b) % 2 == 1) ? -2.0 : 0.0;
      const double d = qb * qb - qa * qa;
      m.x(a, b) = 4.0 * qa * qb * length / (pi * pi) * bracket / (d * d);
      m.p(a, b) = Complex(0.0, -hbar * 2.0 * qa * qb / length * bracket / d);
    }
  }
  verify_link(m);
  return m;
}

SystemModel build_custom(RealVector energies, ComplexMatrix x, ComplexMatrix p, double mass,
                         double hbar) {
  require_positive(mass, "mass");
  require_positive(hbar, "hbar");
  const Eigen::Index n = energies.size();
  if (n < 1 || x.rows() != n || x.cols() != n || p.rows() != n || p.cols() != n) {
    throw DimensionError("build_custom: energies, x and p must share dimension");
  }
  require_hermitian(x, "build_custom x", kLinkTolerance);
  require_hermitian(p, "build_custom p", kLinkTolerance);
  SystemModel m;
  m.kind = ModelKind::custom;
  m.n_levels = static_cast<std::size_t>(n);
  m.energies = std::move(energies);
  m.x = std::move(x);
  m.p = std::move(p);
  m.mass = mass;
  m.hbar = hbar;
  return m;
}

}  // namespace qlangevin
