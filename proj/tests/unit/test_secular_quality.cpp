// Secular approximation against the full dynamics at the oscillator
// parameters. These are approximation-quality checks with loose tolerances;
// the measured deviations are printed so a failure shows by how much.

#include <cmath>
#include <iostream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qlangevin/secular.hpp"

using namespace qlangevin;
using namespace qlangevin::gen;

TEST(SecularQuality, CoherenceEnvelopeWithinTenPercent) {
  const Pipeline pl(oscillator16(), oscillator_bath());
  const double gamma = decoherence_rates(pl.model, pl.bath)(0, 1);
  ComplexMatrix rho0 = pl.observer.equilibrium().rho;
  const double eps = 0.05;
  rho0(0, 1) += eps;
  rho0(1, 0) += eps;
  ASSERT_NO_THROW(DensityMatrix{rho0});

  // Perturbation away from equilibrium, so only the injected coherence decays.
  const ComplexMatrix delta0 = rho0 - pl.observer.equilibrium().rho;
  const ComplexMatrix p = propagator(pl.l, 0.01);
  ComplexVector v = vectorize(delta0);
  double worst = 0.0;
  double worst_t = 0.0;
  const auto steps = static_cast<int>(std::ceil(1.0 / gamma / 0.01));
  for (int k = 1; k <= steps; ++k) {
    v = p * v;
    const double t = 0.01 * k;
    const double full = std::abs(v(1));
    const double secular = eps * std::exp(-gamma * t);
    const double rel = std::abs(full - secular) / secular;
    if (rel > worst) {
      worst = rel;
      worst_t = t;
    }
  }
  std::cout << "gamma_01 = " << gamma << ", max relative envelope deviation " << worst
            << " at t = " << worst_t << " over one decay time\n";
  EXPECT_LT(worst, 0.10);
}

TEST(SecularQuality, SchnakenbergWithinFivePercent) {
  const Pipeline pl(oscillator16(), oscillator_bath());
  const RealMatrix w = population_rates(pl.model, pl.bath);
  RealVector p0 = RealVector::Zero(16);
  p0(0) = 1.0;
  ComplexMatrix rho0 = ComplexMatrix::Zero(16, 16);
  rho0(0, 0) = 1.0;

  const double dt = kOscillatorDt;
  const std::size_t steps = 4000;
  const auto pops = pauli_evolve(p0, w, dt, steps);
  const ComplexMatrix prop = propagator(pl.l, dt);
  ComplexVector v = vectorize(rho0);
  double worst = 0.0;
  double worst_t = 0.0;
  std::size_t compared = 0;
  for (std::size_t k = 1; k <= steps; ++k) {
    v = prop * v;
    if (k % 10 != 0) {
      continue;
    }
    const ComplexMatrix rho = unvectorize(v, 16, 16);
    const ThermoRecord r = pl.observer.evaluate(rho, dt * static_cast<double>(k));
    if (r.coherence > 1e-3 || r.entropy_production_rate < 1e-12) {
      continue;
    }
    const double s = schnakenberg(pops[k], w);
    const double rel = std::abs(s - r.entropy_production_rate) / r.entropy_production_rate;
    ++compared;
    if (rel > worst) {
      worst = rel;
      worst_t = r.t;
    }
  }
  std::cout << compared << " samples with negligible coherence; max relative deviation "
            << worst << " at t = " << worst_t << "\n";
  ASSERT_GT(compared, 0u);
  EXPECT_LT(worst, 0.05);
}
