// Equilibrium values at the shipped level counts against the
// infinite-basis closed forms, at the tightest tolerances one might expect
// from the truncation. The measured gaps are printed.

#include <cmath>
#include <iostream>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace qlangevin;
using namespace qlangevin::gen;

TEST(Truncation, OscillatorEnergyWithinOneMicro) {
  const SystemModel m = oscillator16();
  const double e = internal_energy(canonical_state(m, oscillator_bath()).rho, m.hamiltonian());
  const double closed = 0.5 + 1.0 / (std::exp(1.0) - 1.0);
  std::cout << "N=16 energy gap " << e - closed << "\n";
  EXPECT_NEAR(e, closed, 1e-6);
}

TEST(Truncation, OscillatorEquipartitionWithinOneMicro) {
  const Pipeline pl(oscillator16(), oscillator_bath());
  const double v = modified_kinetic_energy(pl.observer.equilibrium().rho, pl.model, pl.theta);
  std::cout << "N=16 modified kinetic gap " << v - 0.5 << "\n";
  EXPECT_NEAR(v, 0.5, 1e-6);
}

TEST(Truncation, WellEquipartitionWithinTwoTenThousandths) {
  const Pipeline pl(well15(), well_bath());
  const double v = modified_kinetic_energy(pl.observer.equilibrium().rho, pl.model, pl.theta);
  std::cout << "N=15 well modified kinetic gap " << v - 0.5 << "\n";
  EXPECT_NEAR(v, 0.5, 2e-4);
}
