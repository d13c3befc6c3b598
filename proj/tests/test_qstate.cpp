#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qmeur/error.hpp"
#include "qmeur/qstate.hpp"

namespace qmeur {
namespace {

constexpr double kPi = std::numbers::pi;

struct ConstantSource {
  double value;
  double uniform(double a, double b) { return a + (b - a) * value; }
};

struct ZeroSource {
  int calls = 0;
  double uniform(double, double) {
    ++calls;
    return 0.0;
  }
};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no qmeur::Error thrown";
  return ErrorKind::ValidationError;
}

TEST(Register, RejectsSmallDims) {
  EXPECT_EQ(kind_of([] { Register({2, 1}); }), ErrorKind::ValidationError);
  EXPECT_EQ(Register({2, 3, 2}).total(), 12u);
}

TEST(DensityMatrix, ValidatorChecks) {
  EXPECT_EQ(kind_of([] { DensityMatrix(Register({2}), ComplexMatrix{{1, 1}, {0, 0}}); }), ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { DensityMatrix(Register({2}), ComplexMatrix{{0.6, 0}, {0, 0.6}}); }),
            ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { DensityMatrix(Register({2}), ComplexMatrix{{1.5, 0}, {0, -0.5}}); }),
            ErrorKind::ValidationError);
  EXPECT_EQ(kind_of([] { DensityMatrix(Register({2, 2}), ComplexMatrix::identity(2) * 0.5); }),
            ErrorKind::ValidationError);
  EXPECT_NO_THROW(DensityMatrix(Register({2}), ComplexMatrix{{0.5, 0}, {0, 0.5}}));
}

TEST(PartialTrace, BellMarginalIsMaximallyMixed) {
  const auto b = partial_trace(bell_state(), {1});
  EXPECT_LE(max_abs_diff(b.matrix(), ComplexMatrix::identity(2) * 0.5), 1e-15);
  EXPECT_EQ(b.reg().dims(), std::vector<std::size_t>{2});
}

TEST(PartialTrace, ProductStateRecoversFactor) {
  Rng rng(11);
  const auto a = random_state(rng, Register({2}));
  const auto b = random_state(rng, Register({3}));
  const auto ab = tensor(a, b);
  EXPECT_LE(max_abs_diff(partial_trace(ab, {0}).matrix(), a.matrix()), 1e-14);
  EXPECT_LE(max_abs_diff(partial_trace(ab, {1}).matrix(), b.matrix()), 1e-14);
}

TEST(PartialTrace, SuccessiveTracesGiveOne) {
  Rng rng(12);
  const auto rho = random_state(rng, Register({2, 2}));
  const auto a = partial_trace(rho, {0});
  EXPECT_NEAR(trace(a.matrix()).real(), 1.0, 1e-12);
}

TEST(PartialTrace, MatchesProjectionOracle) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const auto rho = random_state(rng, Register({2, 3, 2}));
    for (std::size_t keep = 0; keep < 3; ++keep) {
      EXPECT_LE(max_abs_diff(partial_trace(rho, {keep}).matrix(), oracle::reduced_by_projection(rho, keep)), 1e-14);
    }
  }
}

TEST(PartialTrace, KeepsOriginalOrder) {
  Rng rng(4);
  const auto rho = random_state(rng, Register({2, 3, 2}));
  const auto ac = partial_trace(rho, {2, 0});
  EXPECT_EQ(ac.reg().dims(), (std::vector<std::size_t>{2, 2}));
  EXPECT_LE(max_abs_diff(ac.matrix(), partial_trace(rho, {0, 2}).matrix()), 0.0);
  EXPECT_LE(max_abs_diff(partial_trace(ac, {0}).matrix(), partial_trace(rho, {0}).matrix()), 1e-14);
}

TEST(PartialTrace, InvalidSelections) {
  const auto rho = bell_state();
  EXPECT_EQ(kind_of([&] { partial_trace(rho, {}); }), ErrorKind::InvalidSubsystem);
  EXPECT_EQ(kind_of([&] { partial_trace(rho, {2}); }), ErrorKind::InvalidSubsystem);
  EXPECT_EQ(kind_of([&] { partial_trace(rho, {1, 1}); }), ErrorKind::InvalidSubsystem);
}

TEST(PartialTrace, CommutesWithMixing) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const Register reg({2, 2, 2});
    const auto a = random_state(rng, reg);
    const auto b = random_state(rng, reg);
    const double w = rng.uniform(0, 1);
    const auto lhs = partial_trace(mix(w, a, b), {0, 2});
    const auto rhs = mix(w, partial_trace(a, {0, 2}), partial_trace(b, {0, 2}));
    EXPECT_LE(max_abs_diff(lhs.matrix(), rhs.matrix()), 1e-12);
  }
}

TEST(RandomProbabilities, ConstantSourceHandValues) {
  ConstantSource half{0.5};
  const auto p = random_probabilities(half, 3);
  // q = (1/2, 1/4, 1/8), sum 7/8.
  EXPECT_NEAR(p[0], 4.0 / 7.0, 1e-15);
  EXPECT_NEAR(p[1], 2.0 / 7.0, 1e-15);
  EXPECT_NEAR(p[2], 1.0 / 7.0, 1e-15);
}

TEST(RandomProbabilities, SingleOutcome) {
  Rng rng(1);
  EXPECT_EQ(random_probabilities(rng, 1), ProbabilityVector{1.0});
}

TEST(RandomProbabilities, SumAndOrderOverManySeeds) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    Rng rng(seed);
    const auto p = random_probabilities(rng, 16);
    double sum = 0.0;
    for (double x : p) {
      EXPECT_GE(x, 0.0);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12) << seed;
    EXPECT_TRUE(std::is_sorted(p.rbegin(), p.rend())) << seed;
  }
}

TEST(RandomProbabilities, DegenerateDrawsExhaustRetries) {
  ZeroSource zero;
  EXPECT_EQ(kind_of([&] { random_probabilities(zero, 4); }), ErrorKind::DegenerateDraw);
  EXPECT_EQ(zero.calls, 4 * detail::kMaxProbabilityRedraws);
}

TEST(RandomHermitian, ExactlyHermitianAndBounded) {
  Rng rng(8);
  const auto h = random_hermitian(rng, 16);
  for (std::size_t r = 0; r < 16; ++r) {
    EXPECT_EQ(h(r, r).imag(), 0.0);
    for (std::size_t c = 0; c < 16; ++c) {
      EXPECT_EQ(h(r, c), std::conj(h(c, r)));
      EXPECT_LE(std::abs(h(r, c).real()), 1.0);
      EXPECT_LE(std::abs(h(r, c).imag()), 1.0);
    }
  }
  const auto e = eig_hermitian(h);
  EXPECT_LE(max_abs_diff(e.eigenvectors.adjoint() * e.eigenvectors, ComplexMatrix::identity(16)), 1e-10);
}

TEST(RandomHermitian, SameSeedSameMatrix) {
  Rng a(21), b(21);
  EXPECT_EQ(random_hermitian(a, 5), random_hermitian(b, 5));
}

TEST(RandomState, ValidAndSpectrumMatchesProbabilities) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Rng rng(seed);
    const auto rho = random_state(rng, Register({2, 2, 2, 2}));
    EXPECT_NO_THROW(rho.validate());
    Rng replay(seed);
    auto p = random_probabilities(replay, 16);
    std::sort(p.begin(), p.end());
    const auto spectrum = eig_hermitian(rho.matrix()).eigenvalues;
    double sum = 0.0;
    for (std::size_t k = 0; k < 16; ++k) {
      EXPECT_NEAR(spectrum[k], p[k], 1e-9);
      sum += spectrum[k];
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

TEST(RandomState, Seed42IsBitIdentical) {
  Rng a(42), b(42);
  EXPECT_EQ(random_state(a, Register({2, 2, 2, 2})).matrix(), random_state(b, Register({2, 2, 2, 2})).matrix());
}

TEST(Rng, ClosedUnitIntervalAndAffineMap) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.uniform(-1.0, 1.0);
    EXPECT_GE(x, -1.0);
    EXPECT_LE(x, 1.0);
  }
  EXPECT_NE(derive_seed(42, 0), derive_seed(42, 1));
  EXPECT_NE(derive_seed(42, 0), derive_seed(43, 0));
}

TEST(FamilyMixed, Endpoints) {
  EXPECT_LE(max_abs_diff(family_mixed_two_qubit(0.0, 1.234).matrix(), ComplexMatrix::identity(4) * 0.25), 1e-15);
  EXPECT_LE(max_abs_diff(family_mixed_two_qubit(1.0, kPi / 4).matrix(), bell_state().matrix()), 1e-15);
}

TEST(FamilyMixed, HalfMixedSpectrum) {
  // p + (1-p)/4 on |Phi+>, (1-p)/4 on its complement.
  const auto e = eig_hermitian(family_mixed_two_qubit(0.5, kPi / 4).matrix());
  EXPECT_NEAR(e.eigenvalues[0], 1.0 / 8, 1e-12);
  EXPECT_NEAR(e.eigenvalues[1], 1.0 / 8, 1e-12);
  EXPECT_NEAR(e.eigenvalues[2], 1.0 / 8, 1e-12);
  EXPECT_NEAR(e.eigenvalues[3], 5.0 / 8, 1e-12);
}

TEST(FamilyMixed, OutOfRange) {
  EXPECT_EQ(kind_of([] { family_mixed_two_qubit(1.01, 0); }), ErrorKind::OutOfRange);
  EXPECT_EQ(kind_of([] { family_mixed_two_qubit(-0.1, 0); }), ErrorKind::OutOfRange);
}

TEST(GeneralizedW, CollapsedAmplitudes) {
  const auto rho = generalized_w(kPi / 2, 0.0);
  ComplexMatrix expected(8, 8);
  expected(1, 1) = 1.0;
  EXPECT_LE(max_abs_diff(rho.matrix(), expected), 1e-15);
}

TEST(GeneralizedW, PureForAnyAngles) {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const auto rho = generalized_w(rng.uniform(0, kPi), rng.uniform(0, 2 * kPi));
    EXPECT_NEAR(trace(rho.matrix()).real(), 1.0, 1e-12);
    EXPECT_NEAR(trace(rho.matrix() * rho.matrix()).real(), 1.0, 1e-12);
  }
}

TEST(GeneralizedW, AmplitudeOnOneZeroZero) {
  const double alpha = 2 * kPi / 3;
  const double beta = kPi / 5;
  const auto rho = generalized_w(alpha, beta);
  // rho(100, 100) = cos^2 alpha = 1/4; the coherence with |001> carries the
  // sign of cos alpha = -1/2.
  EXPECT_NEAR(rho.matrix()(4, 4).real(), 0.25, 1e-15);
  EXPECT_NEAR(rho.matrix()(4, 1).real(), -0.5 * std::sin(alpha) * std::cos(beta), 1e-15);
  EXPECT_LT(rho.matrix()(4, 1).real(), 0.0);
}

}  // namespace
}  // namespace qmeur
