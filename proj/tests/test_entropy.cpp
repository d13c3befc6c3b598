#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qmeur/entropy.hpp"
#include "qmeur/error.hpp"

namespace qmeur {
namespace {

constexpr double kPi = std::numbers::pi;

DensityMatrix product00() { return pure_state(Register({2, 2}), {1, 0, 0, 0}); }

TEST(Shannon, Examples) {
  EXPECT_NEAR(shannon({0.5, 0.5}), 1.0, 1e-15);
  EXPECT_EQ(shannon({1.0, 0.0}), 0.0);
  const double expected = -(4.0 / 7) * std::log2(4.0 / 7) - (2.0 / 7) * std::log2(2.0 / 7) - (1.0 / 7) * std::log2(1.0 / 7);
  EXPECT_NEAR(shannon({4.0 / 7, 2.0 / 7, 1.0 / 7}), expected, 1e-14);
  EXPECT_NEAR(expected, 1.3788, 1e-4);
}

TEST(Shannon, AgreesWithDirectSum) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_probabilities(rng, 2 + i % 6);
    EXPECT_NEAR(shannon(p), oracle::shannon_direct(p), 1e-12);
  }
}

TEST(Shannon, RejectsBadDistributions) {
  EXPECT_THROW(shannon({0.5, 0.6}), Error);
  EXPECT_THROW(shannon({1.1, -0.1}), Error);
  EXPECT_THROW(shannon({}), Error);
  EXPECT_NEAR(shannon({1.0 + 5e-10, -5e-13}), 0.0, 1e-9);
}

TEST(VonNeumann, Examples) {
  EXPECT_NEAR(von_neumann(maximally_mixed(Register({2}))), 1.0, 1e-14);
  EXPECT_NEAR(von_neumann(maximally_mixed(Register({2, 2, 2}))), 3.0, 1e-13);
  EXPECT_NEAR(von_neumann(bell_state()), 0.0, 1e-12);
  EXPECT_NEAR(von_neumann(generalized_w(0.7, 1.3)), 0.0, 1e-12);
  const double expected = 3 * (1.0 / 8) * 3 + (5.0 / 8) * std::log2(8.0 / 5);
  EXPECT_NEAR(von_neumann(family_mixed_two_qubit(0.5, kPi / 4)), expected, 1e-12);
  EXPECT_NEAR(expected, 1.5488, 1e-4);
}

TEST(Conditional, Examples) {
  EXPECT_NEAR(conditional(bell_state(), {0}, {1}), -1.0, 1e-12);
  EXPECT_NEAR(conditional(maximally_mixed(Register({2, 2})), {0}, {1}), 1.0, 1e-12);
  const double s = von_neumann(family_mixed_two_qubit(0.5, kPi / 4));
  EXPECT_NEAR(conditional(family_mixed_two_qubit(0.5, kPi / 4), {0}, {1}), s - 1.0, 1e-12);
  EXPECT_NEAR(conditional(bell_state(), {0}, {}), 1.0, 1e-12);
  EXPECT_EQ(entropy_of(bell_state(), {}), 0.0);
}

TEST(MutualInformation, Examples) {
  EXPECT_NEAR(mutual_information(product00(), {0}, {1}), 0.0, 1e-12);
  EXPECT_NEAR(mutual_information(bell_state(), {0}, {1}), 2.0, 1e-12);
  EXPECT_NEAR(mutual_information(maximally_mixed(Register({2, 2})), {0}, {1}), 0.0, 1e-12);
}

TEST(Holevo, Examples) {
  EXPECT_NEAR(holevo(product00(), pauli_z(), {1}), 0.0, 1e-12);
  EXPECT_NEAR(holevo(bell_state(), pauli_z(), {1}), 1.0, 1e-12);
  EXPECT_NEAR(holevo(bell_state(), pauli_x(), {1}), 1.0, 1e-12);
  EXPECT_NEAR(holevo(maximally_mixed(Register({2, 2})), pauli_x(), {1}), 0.0, 1e-12);
}

TEST(Holevo, MemoryMustExcludeMeasuredSystem) {
  try {
    holevo(bell_state(), pauli_z(), {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidSubsystem);
  }
}

TEST(MeasuredConditional, Examples) {
  EXPECT_NEAR(measured_conditional(bell_state(), pauli_z(), {1}), 0.0, 1e-12);
  EXPECT_NEAR(measured_conditional(maximally_mixed(Register({2, 2})), pauli_z(), {1}), 1.0, 1e-12);
  EXPECT_NEAR(measured_conditional(product00(), pauli_z(), {1}), 0.0, 1e-12);
  EXPECT_NEAR(measured_conditional(product00(), pauli_x(), {1}), 1.0, 1e-12);
}

TEST(EntropyInvariants, ConditionalEqualsShannonMinusHolevo) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto rho = random_state(rng, Register({2, 2, 2}));
    const auto basis = random_basis(rng, 2);
    for (const Subsystems& mem : {Subsystems{1}, Subsystems{2}, Subsystems{1, 2}}) {
      EXPECT_NEAR(measured_conditional(rho, basis, mem),
                  measured_shannon(rho, basis) - holevo(rho, basis, mem), 1e-9);
    }
  }
}

TEST(EntropyInvariants, MeasurementDoesNotDecreaseConditionalEntropy) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto rho = random_state(rng, Register({2, 3}));
    const auto basis = random_basis(rng, 2);
    EXPECT_GE(measured_conditional(rho, basis, {1}), conditional(rho, {0}, {1}) - 1e-10);
    EXPECT_LE(holevo(rho, basis, {1}), mutual_information(rho, {0}, {1}) + 1e-10);
    const double i = holevo(rho, basis, {1});
    EXPECT_GE(i, -1e-10);
    EXPECT_LE(i, measured_shannon(rho, basis) + 1e-10);
  }
}

TEST(EntropyInvariants, Concavity) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const Register reg({2, 2});
    const auto a = random_state(rng, reg);
    const auto b = random_state(rng, reg);
    const double w = rng.unit();
    EXPECT_GE(von_neumann(mix(w, a, b)), w * von_neumann(a) + (1 - w) * von_neumann(b) - 1e-10);
  }
}

TEST(EntropyInvariants, LocalUnitaryInvariance) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const auto rho = random_state(rng, Register({2, 2}));
    const auto u = random_basis(rng, 2).vectors();
    const ComplexMatrix lifted = kron(u, ComplexMatrix::identity(2));
    const DensityMatrix rotated(rho.reg(), lifted * rho.matrix() * lifted.adjoint());
    EXPECT_NEAR(von_neumann(rotated), von_neumann(rho), 1e-10);
    EXPECT_NEAR(conditional(rotated, {0}, {1}), conditional(rho, {0}, {1}), 1e-10);
    EXPECT_NEAR(mutual_information(rotated, {0}, {1}), mutual_information(rho, {0}, {1}), 1e-10);
  }
}

}  // namespace
}  // namespace qmeur
