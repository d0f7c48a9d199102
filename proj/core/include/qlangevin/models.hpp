#pragma once

#include <cstddef>

#include "qlangevin/matrix.hpp"

namespace qlangevin {

enum class ModelKind { oscillator, well, custom };

const char* to_string(ModelKind kind);

// Truncated energy-basis representation of a one-dimensional particle.
// `energies` are ascending; x and p are Hermitian matrices in the same basis.
struct SystemModel {
  ModelKind kind = ModelKind::custom;
  std::size_t n_levels = 0;
  RealVector energies;
  ComplexMatrix x;
  ComplexMatrix p;
  double mass = 1.0;
  double hbar = 1.0;
  double omega = 0.0;   // oscillator only
  double length = 0.0;  // well only

  ComplexMatrix hamiltonian() const;
};

/// Harmonic oscillator, levels n = 0..N-1.
SystemModel build_oscillator(std::size_t n_levels, double mass, double omega, double hbar);

/// Infinite square well on [0, L]. Quantum numbers n = 1..N are stored at
/// indices 0..N-1.
SystemModel build_well(std::size_t n_levels, double mass, double length, double hbar);

/// Model from explicit data. Checks shapes and Hermiticity but not the
/// position/momentum link, so synthetic spectra can be used in tests.
SystemModel build_custom(RealVector energies, ComplexMatrix x, ComplexMatrix p, double mass,
                         double hbar);

/// max |p - (m/iħ)[x, H]|.
double momentum_link_residual(const SystemModel& model);

}  // namespace qlangevin
