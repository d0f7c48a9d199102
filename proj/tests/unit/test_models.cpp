#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "qlangevin/errors.hpp"
#include "qlangevin/models.hpp"

using namespace qlangevin;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Oscillator, SpectrumAndElements) {
  const SystemModel m = build_oscillator(16, 1.0, 1.0, 1.0);
  EXPECT_EQ(m.kind, ModelKind::oscillator);
  EXPECT_DOUBLE_EQ(m.energies(0), 0.5);
  EXPECT_DOUBLE_EQ(m.energies(15), 15.5);
  EXPECT_NEAR(m.x(0, 1).real(), 0.7071068, 1e-7);
  EXPECT_NEAR(m.p(0, 1).imag(), -0.7071068, 1e-7);
  EXPECT_EQ(m.p(0, 1).real(), 0.0);
}

TEST(Oscillator, TridiagonalStructure) {
  const SystemModel m = build_oscillator(8, 2.0, 0.7, 1.3);
  for (Eigen::Index i = 0; i < 8; ++i) {
    for (Eigen::Index j = 0; j < 8; ++j) {
      if (std::abs(i - j) != 1) {
        EXPECT_EQ(m.x(i, j), Complex(0.0, 0.0));
        EXPECT_EQ(m.p(i, j), Complex(0.0, 0.0));
      } else {
        EXPECT_EQ(m.x(i, j).imag(), 0.0);
        EXPECT_EQ(m.p(i, j).real(), 0.0);
      }
    }
  }
}

TEST(Oscillator, NonUnitParameters) {
  const double mass = 2.0;
  const double omega = 0.7;
  const double hbar = 1.3;
  const SystemModel m = build_oscillator(6, mass, omega, hbar);
  EXPECT_NEAR(m.x(2, 3).real(), std::sqrt(hbar / (2 * mass * omega)) * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(m.p(3, 2).imag(), std::sqrt(mass * omega * hbar / 2) * std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(m.energies(4), hbar * omega * 4.5, 1e-14);
}

TEST(Oscillator, TruncatedCommutator) {
  const SystemModel m = build_oscillator(10, 1.0, 1.0, 1.0);
  const ComplexMatrix c = commutator(m.x, m.p);
  for (Eigen::Index k = 0; k < 9; ++k) {
    EXPECT_NEAR(std::abs(c(k, k) - Complex(0.0, 1.0)), 0.0, 1e-14);
  }
  EXPECT_NEAR(std::abs(c(9, 9) - Complex(0.0, -9.0)), 0.0, 1e-13);
}

TEST(Well, SpectrumAndElements) {
  const SystemModel m = build_well(15, 3.0, 2.0, 1.0);
  EXPECT_EQ(m.kind, ModelKind::well);
  EXPECT_NEAR(m.energies(0), 0.4112335, 1e-7);
  EXPECT_NEAR(m.energies(0), pi * pi / 24.0, 1e-15);
  for (Eigen::Index n = 0; n < 15; ++n) {
    EXPECT_DOUBLE_EQ(m.x(n, n).real(), 1.0);
  }
  EXPECT_NEAR(m.x(0, 1).real(), -0.360253, 1e-6);
  EXPECT_NEAR(m.x(0, 1).real(), -32.0 / (9.0 * pi * pi), 1e-15);
}

TEST(Well, ParitySelectionRule) {
  const SystemModel m = build_well(9, 1.0, 1.0, 1.0);
  for (Eigen::Index a = 0; a < 9; ++a) {
    for (Eigen::Index b = 0; b < 9; ++b) {
      if (a != b && (a + b) % 2 == 0) {
        EXPECT_EQ(m.x(a, b), Complex(0.0, 0.0));
        EXPECT_EQ(m.p(a, b), Complex(0.0, 0.0));
      }
      if ((a + b) % 2 == 1) {
        EXPECT_NE(m.x(a, b), Complex(0.0, 0.0));
      }
    }
  }
}

TEST(Well, MomentumElementClosedForm) {
  // n = 1, m = 2: p = -i ħ (2·2/L)(-2)/3.
  const double length = 2.0;
  const SystemModel m = build_well(4, 3.0, length, 1.0);
  EXPECT_NEAR(m.p(0, 1).imag(), 8.0 / (3.0 * length), 1e-15);
}

TEST(Well, CanonicalCommutatorImprovesWithSize) {
  auto defect = [](std::size_t n) {
    const SystemModel m = build_well(n, 1.0, 1.0, 1.0);
    return std::abs(commutator(m.x, m.p)(0, 0) - Complex(0.0, 1.0));
  };
  EXPECT_LT(defect(40), defect(10));
}

class ModelProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(ModelProperties, HermitianAndMomentumLink) {
  const std::size_t n = GetParam();
  for (const SystemModel& m : {build_oscillator(n, 1.0, 1.0, 1.0), build_well(n, 3.0, 2.0, 1.0),
                               build_oscillator(n, 0.4, 2.5, 0.8), build_well(n, 0.5, 1.5, 1.7)}) {
    EXPECT_LT(hermiticity_residual(m.x), 1e-12);
    EXPECT_LT(hermiticity_residual(m.p), 1e-12);
    EXPECT_LT(momentum_link_residual(m), 1e-12 * std::max(1.0, max_abs(m.p)));
    for (Eigen::Index k = 1; k < m.energies.size(); ++k) {
      EXPECT_GT(m.energies(k), m.energies(k - 1));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, ModelProperties, ::testing::Values(2, 3, 5, 10, 16, 32));

TEST(Models, RejectBadParameters) {
  EXPECT_THROW(build_oscillator(1, 1, 1, 1), ParameterError);
  EXPECT_THROW(build_oscillator(4, 0, 1, 1), ParameterError);
  EXPECT_THROW(build_oscillator(4, 1, -1, 1), ParameterError);
  EXPECT_THROW(build_well(4, 1, 0, 1), ParameterError);
  EXPECT_THROW(build_well(4, 1, 1, std::nan("")), ParameterError);
}

TEST(Models, CustomChecksShapes) {
  const RealVector e = RealVector::LinSpaced(3, 0.0, 2.0);
  EXPECT_THROW(build_custom(e, ComplexMatrix::Zero(2, 2), ComplexMatrix::Zero(3, 3), 1, 1),
               DimensionError);
  ComplexMatrix bad = ComplexMatrix::Zero(3, 3);
  bad(0, 1) = 1.0;
  EXPECT_THROW(build_custom(e, bad, ComplexMatrix::Zero(3, 3), 1, 1), SymmetryError);
}
