#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "qlangevin/errors.hpp"

using namespace qlangevin;
using namespace qlangevin::gen;

namespace {

// Right-hand side of the master equation evaluated with plain matrix products.
ComplexMatrix direct_rhs(const SystemModel& m, const BathParams& b, const ComplexMatrix& theta,
                         double force, const ComplexMatrix& rho) {
  const Complex ih(0.0, m.hbar);
  const ComplexMatrix& x = m.x;
  const ComplexMatrix h = m.hamiltonian();
  const double c = b.kt() * b.beta() * m.mass / (m.hbar * m.hbar);
  const ComplexMatrix xxr = x * (x * rho - rho * x) - (x * rho - rho * x) * x;
  const ComplexMatrix s = theta * rho + rho * theta;
  return (h * rho - rho * h) / ih - force * (x * rho - rho * x) / ih - c * xxr +
         (b.beta() / (2.0 * ih)) * (x * s - s * x);
}

ComplexMatrix equilibrium(const SystemModel& m, const BathParams& b) {
  return canonical_state(m, b).rho;
}

}  // namespace

TEST(Assemble, CanonicalStateIsStationary) {
  for (const auto& [m, b] : {std::pair{oscillator16(), oscillator_bath()},
                             std::pair{well15(), well_bath()}}) {
    const Liouvillian l = assemble(m, b, friction_operator(m, b));
    EXPECT_LT(max_abs(l.full * vectorize(equilibrium(m, b))), 1e-10);
  }
}

TEST(Assemble, PartsSumToFull) {
  const SystemModel m = oscillator16();
  const BathParams b = oscillator_bath();
  const Liouvillian l = assemble(m, b, friction_operator(m, b), 0.4);
  EXPECT_LT(max_abs(l.full - (l.hamiltonian_part + l.force_part + l.relaxation)), 1e-14);
  EXPECT_EQ(l.n_levels, 16u);
  EXPECT_EQ(l.variant, Variant::proposed);
}

TEST(Assemble, MatchesDirectEvaluation) {
  Rng rng(31);
  for (const auto& [m, b] : {std::pair{oscillator16(), oscillator_bath()},
                             std::pair{well15(), well_bath()},
                             std::pair{well15(), well_bath(Variant::caldeira_leggett)}}) {
    const ComplexMatrix theta = friction_operator(m, b);
    const Liouvillian l = assemble(m, b, theta, 0.7);
    const ComplexMatrix rho = random_density(rng, m.x.rows());
    const ComplexMatrix expected = direct_rhs(m, b, theta, 0.7, rho);
    EXPECT_LT(max_abs(l.apply(rho) - expected), 1e-10 * std::max(1.0, max_abs(expected)));
  }
}

TEST(Assemble, ZeroFrictionCoefficient) {
  const SystemModel m = oscillator16();
  const BathParams b(1.0, 0.0);
  const Liouvillian l = assemble(m, b, friction_operator(m, b));
  EXPECT_EQ(max_abs(l.relaxation), 0.0);
  const ComplexMatrix pure = commutator_superoperator(m.hamiltonian()) / Complex(0.0, m.hbar);
  EXPECT_LT(max_abs(l.full - pure), 1e-15);
  EXPECT_TRUE(check_constraints(l).all_passed());
}

TEST(Assemble, CaldeiraLeggettIsNotStationary) {
  const SystemModel m = oscillator16();
  const BathParams b = oscillator_bath(Variant::caldeira_leggett);
  const Liouvillian l = assemble(m, b, friction_operator(m, b));
  EXPECT_EQ(l.variant, Variant::caldeira_leggett);
  EXPECT_GT(max_abs(l.full * vectorize(equilibrium(m, b))), 1e-3);
}

TEST(Assemble, InputErrors) {
  const SystemModel m = oscillator16();
  const BathParams b = oscillator_bath();
  EXPECT_THROW(assemble(m, b, ComplexMatrix::Zero(4, 4)), DimensionError);
  ComplexMatrix bad = friction_operator(m, b);
  bad(0, 1) += 1e-3;
  EXPECT_THROW(assemble(m, b, bad), SymmetryError);
}

TEST(Constraints, ProposedVariantPasses) {
  for (const auto& [m, b] : {std::pair{oscillator16(), oscillator_bath()},
                             std::pair{well15(), well_bath()}}) {
    const ConstraintReport r = check_constraints(assemble(m, b, friction_operator(m, b)));
    ASSERT_EQ(r.checks.size(), 4u);
    EXPECT_TRUE(r.all_passed());
    EXPECT_LT(r.max_violation(), 1e-12);
    EXPECT_EQ(r.checks[0].name, "trace_preservation");
  }
}

TEST(Constraints, CorruptedDiagonalFailsTrace) {
  const SystemModel m = oscillator16();
  const BathParams b = oscillator_bath();
  Liouvillian l = assemble(m, b, friction_operator(m, b));
  l.full(17, 17) += 1e-3;  // L_1111
  const ConstraintReport r = check_constraints(l);
  EXPECT_FALSE(r.checks[0].passed);
  EXPECT_NEAR(r.checks[0].violation, 1e-3, 1e-12);
  EXPECT_FALSE(r.all_passed());
}

TEST(Constraints, BrokenPairingFailsHermiticity) {
  const SystemModel m = oscillator16();
  const BathParams b = oscillator_bath();
  Liouvillian l = assemble(m, b, friction_operator(m, b));
  // Purely imaginary change on an element of the (0,1) block; keeps the trace row.
  l.full(1, 17) += Complex(0.0, 1e-3);
  const ConstraintReport r = check_constraints(l);
  EXPECT_TRUE(r.checks[0].passed);
  EXPECT_FALSE(r.checks[1].passed);
}

TEST(Constraints, CaldeiraLeggettOscillatorStructure) {
  const SystemModel m = oscillator16();
  const BathParams b = oscillator_bath(Variant::caldeira_leggett);
  const ConstraintReport r = check_constraints(assemble(m, b, friction_operator(m, b)));
  EXPECT_TRUE(r.checks[0].passed);
  EXPECT_TRUE(r.checks[1].passed);
}

TEST(LiouvillianProperty, OutputHermitianTraceless) {
  Rng rng(32);
  for (int trial = 0; trial < 12; ++trial) {
    const bool osc = trial % 2 == 0;
    const SystemModel m = osc ? build_oscillator(random_int(rng, 3, 12), random_real(rng, 0.5, 2),
                                                 random_real(rng, 0.5, 2), 1.0)
                              : build_well(random_int(rng, 3, 12), random_real(rng, 0.5, 4),
                                           random_real(rng, 0.5, 3), 1.0);
    const Variant v = trial % 3 == 0 ? Variant::caldeira_leggett : Variant::proposed;
    const BathParams b(random_real(rng, 0.3, 3), random_real(rng, 0.0, 1.5), 1.0, 0.5, v);
    const Liouvillian l = assemble(m, b, friction_operator(m, b), random_real(rng, -1, 1));
    const ComplexMatrix out = l.apply(random_density(rng, m.x.rows()));
    const double scale = std::max(1.0, max_abs(out));
    EXPECT_LT(hermiticity_residual(out), 1e-12 * scale);
    EXPECT_LT(std::abs(out.trace()), 1e-12 * scale);
  }
}

TEST(LiouvillianProperty, RelaxationAnnihilatesEquilibrium) {
  Rng rng(33);
  for (int trial = 0; trial < 8; ++trial) {
    const SystemModel m = trial % 2 == 0
                              ? build_oscillator(random_int(rng, 4, 16), 1.0,
                                                 random_real(rng, 0.5, 2), 1.0)
                              : build_well(random_int(rng, 4, 15), random_real(rng, 1, 4),
                                           random_real(rng, 1, 3), 1.0);
    const BathParams b(random_real(rng, 0.5, 3), random_real(rng, 0.1, 1.5));
    const Liouvillian l = assemble(m, b, friction_operator(m, b), random_real(rng, -2, 2));
    EXPECT_LT(max_abs(l.apply_relaxation(equilibrium(m, b))), 1e-10);
  }
}

TEST(LiouvillianProperty, Linearity) {
  Rng rng(34);
  const SystemModel m = well15();
  const BathParams b = well_bath();
  const Liouvillian l = assemble(m, b, friction_operator(m, b));
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexVector v = random_rect(rng, 225, 1);
    const ComplexVector w = random_rect(rng, 225, 1);
    const Complex a(random_real(rng, -2, 2), random_real(rng, -2, 2));
    const ComplexVector lhs = l.full * (a * v + w);
    const ComplexVector rhs = a * (l.full * v) + l.full * w;
    EXPECT_LT(max_abs(lhs - rhs), 1e-12 * std::max(1.0, max_abs(lhs)));
  }
}
