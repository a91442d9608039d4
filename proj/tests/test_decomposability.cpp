#include "fermereo/subspace.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <gtest/gtest.h>

#include "fermereo/combinatorics.hpp"
#include "fermereo/rng.hpp"
#include "oracles.hpp"

namespace fermereo {
namespace {

constexpr double kEps = 1e-9;

AntiSymTensor xi_state() {
  AntiSymTensor xi(4, 2);
  const double inv = 1.0 / std::sqrt(2.0);
  xi.set_coeff(0b0011, inv);
  xi.set_coeff(0b1100, inv);
  return xi;
}

TEST(DecomposableState, CoordinateSubspaceGivesBasisElement) {
  for (int d = 2; d <= 5; ++d) {
    for (int r = 1; r <= d; ++r) {
      for (Mask mask : combinations(d, r)) {
        const AntiSymTensor state = decomposable_state(Subspace::coordinate(d, mask));
        EXPECT_TRUE(phase_equal(state, AntiSymTensor::basis_element(d, mask), 1e-10));
      }
    }
  }
  EXPECT_THROW(decomposable_state(Subspace::zero(3)), std::domain_error);
}

TEST(DecomposableState, IsUnitAndSupportedOnItsSubspace) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % d);
    const Subspace s = random_subspace(d, r, rng);
    const AntiSymTensor state = decomposable_state(s);
    EXPECT_NEAR(state.norm(), 1.0, 1e-10);
    const Decomposability verdict = is_decomposable(state, kEps);
    EXPECT_TRUE(verdict.decomposable);
    EXPECT_TRUE(verdict.support.equals(s, 1e-7));
  }
}

TEST(IsDecomposable, BasisElementsAndVectors) {
  for (Mask mask : combinations(4, 2)) {
    const Decomposability verdict = is_decomposable(AntiSymTensor::basis_element(4, mask), kEps);
    EXPECT_TRUE(verdict.decomposable);
    EXPECT_TRUE(verdict.support.equals(Subspace::coordinate(4, mask), 1e-9));
  }
  // Every degree-1 tensor is a wedge of one vector.
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(is_decomposable(random_antisym_tensor(5, 1, rng), kEps).decomposable);
  }
}

TEST(IsDecomposable, RejectsThePairedSum) {
  const Decomposability verdict = is_decomposable(xi_state(), kEps);
  EXPECT_FALSE(verdict.decomposable);
  EXPECT_EQ(verdict.support.rank(), 4);  // one-body support exceeds the degree
}

TEST(IsDecomposable, SumsOfDisjointPairsScaleWithOverlap) {
  // c*e12 + s*e34 is decomposable only when one coefficient vanishes.
  for (double theta : {0.0, 0.3, 0.7853981633974483, 1.2, 1.5707963267948966}) {
    AntiSymTensor t(4, 2);
    if (std::cos(theta) != 0.0) t.set_coeff(0b0011, std::cos(theta));
    if (std::sin(theta) != 0.0) t.set_coeff(0b1100, std::sin(theta));
    const bool pure = std::abs(std::cos(theta)) < 1e-15 || std::abs(std::sin(theta)) < 1e-15;
    EXPECT_EQ(is_decomposable(t, kEps).decomposable, pure) << "theta = " << theta;
  }
}

TEST(IsDecomposable, GuardsShapeAndZero) {
  EXPECT_THROW(is_decomposable(AntiSymTensor(4, 2), kEps), std::domain_error);
  AntiSymTensor scalar(4, 0);
  scalar.set_coeff(0, 1.0);
  EXPECT_THROW(is_decomposable(scalar, kEps), std::invalid_argument);
}

TEST(IsDecomposable, AgreesWithUnfoldingOracle) {
  Rng rng(47);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int r = 1 + static_cast<int>(rng() % 2);
    if (r > d) continue;
    const bool constructed = trial % 2 == 0;
    const AntiSymTensor state = constructed ? random_decomposable_state(d, r, rng)
                                            : random_antisym_tensor(d, r, rng);
    const Decomposability mine = is_decomposable(state, kEps);
    const oracle::OracleDecomposability ref = oracle::oracle_decomposable(state, kEps);
    ASSERT_EQ(mine.decomposable, ref.decomposable)
        << "d=" << d << " r=" << r << " constructed=" << constructed;
    if (mine.decomposable) {
      EXPECT_TRUE(mine.support.equals(ref.support, 1e-7));
    }
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

// A decomposable tensor times any phase stays decomposable with the same
// support; adding a generic orthogonal wedge breaks it.
TEST(IsDecomposable, StableUnderPhaseFragileUnderMixing) {
  Rng rng(53);
  const AntiSymTensor base = random_decomposable_state(4, 2, rng);
  const AntiSymTensor rotated = Complex{std::cos(0.9), std::sin(0.9)} * base;
  EXPECT_TRUE(is_decomposable(rotated, kEps).decomposable);

  const Decomposability verdict = is_decomposable(base, kEps);
  // Mix in the wedge over the orthogonal complement (dim 4, degree 2).
  const Subspace complement =
      Subspace::span_of(Eigen::MatrixXcd::Identity(4, 4) - verdict.support.projector(), kEps);
  const AntiSymTensor mixed =
      (std::sqrt(0.5) * base + std::sqrt(0.5) * decomposable_state(complement)).normalized();
  EXPECT_FALSE(is_decomposable(mixed, kEps).decomposable);
}

}  // namespace
}  // namespace fermereo
