#include "fermereo/product_tensor.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "fermereo/combinatorics.hpp"
#include "fermereo/rng.hpp"
#include "oracles.hpp"

namespace fermereo {
namespace {

constexpr double kTight = 1e-12;

ProductTensor random_product_tensor(int dim, int degree, Rng& rng) {
  ProductTensor t(dim, degree);
  t.data() = gaussian_vector(static_cast<int>(t.size()), rng);
  return t;
}

TEST(ProductTensorShape, FlatIndexRoundTripAndGuards) {
  ProductTensor t(3, 2);
  EXPECT_EQ(t.size(), 9u);
  t.set({1, 2}, Complex{2.0, 1.0});
  EXPECT_EQ(t.at({1, 2}), Complex(2.0, 1.0));
  EXPECT_EQ(t.flat_index({1, 2}), 5u);  // first slot most significant
  EXPECT_EQ(t.flat_index({2, 1}), 7u);
  EXPECT_THROW(t.flat_index({1}), std::invalid_argument);
  EXPECT_THROW(t.flat_index({1, 3}), std::invalid_argument);
  EXPECT_THROW(ProductTensor(10, 7, 1000), std::invalid_argument);  // 10^7 over the cap
}

// The brute-force permutation-sum projector must itself be a Hermitian
// idempotent of the right trace; this anchors every oracle built on it.
TEST(Oracle, PermutationSumProjectorIsProjector) {
  for (int d = 2; d <= 4; ++d) {
    for (int r = 1; r <= 3; ++r) {
      const Eigen::MatrixXcd a = oracle::permutation_sum_projector(d, r);
      EXPECT_LT((a * a - a).cwiseAbs().maxCoeff(), kTight);
      EXPECT_LT((a - a.adjoint()).cwiseAbs().maxCoeff(), kTight);
      EXPECT_NEAR(a.trace().real(), static_cast<double>(binomial(d, r)), kTight);
      EXPECT_NEAR(a.trace().imag(), 0.0, kTight);
    }
  }
}

TEST(Embed, MatchesPermutationSumColumns) {
  for (int d = 2; d <= 4; ++d) {
    for (int r = 1; r <= 3 && r <= d; ++r) {
      const Eigen::MatrixXcd projector = oracle::permutation_sum_projector(d, r);
      for (Mask mask : combinations(d, r)) {
        const ProductTensor embedded = embed_full(AntiSymTensor::basis_element(d, mask));
        const Eigen::VectorXcd expected = oracle::full_basis_column(d, mask, projector);
        EXPECT_LT((embedded.data() - expected).norm(), kTight);
      }
    }
  }
}

TEST(Embed, IsIsometry) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const AntiSymTensor a = random_antisym_tensor(4, 2, rng);
    const AntiSymTensor b = random_antisym_tensor(4, 2, rng);
    const Complex lhs = inner(embed_full(a), embed_full(b));
    EXPECT_NEAR(std::abs(lhs - inner(a, b)), 0.0, 1e-10);
  }
}

TEST(Bridge, RoundTripIsIdentity) {
  Rng rng(19);
  for (int d = 2; d <= 5; ++d) {
    for (int r = 1; r <= 3 && r <= d; ++r) {
      const AntiSymTensor a = random_antisym_tensor(d, r, rng);
      const AntiSymTensor back = antisymmetrize(embed_full(a));
      EXPECT_TRUE(back.approx_equal(a, kTight));
    }
  }
}

TEST(Bridge, EmbedAfterAntisymmetrizeProjects) {
  Rng rng(23);
  for (int d = 2; d <= 4; ++d) {
    for (int r = 2; r <= 3 && r <= d; ++r) {
      const Eigen::MatrixXcd projector = oracle::permutation_sum_projector(d, r);
      for (int trial = 0; trial < 5; ++trial) {
        const ProductTensor t = random_product_tensor(d, r, rng);
        const ProductTensor round = embed_full(antisymmetrize(t));
        const Eigen::VectorXcd expected = projector * t.data();
        EXPECT_LT((round.data() - expected).norm(), 1e-10);
      }
    }
  }
}

// The coordinate of the antisymmetrized two-slot product e_1 (x) e_2 on
// the pair state is 1/sqrt(2): the bridge is an isometry, not the
// coefficient-summing map.
TEST(Bridge, TwoSlotProductHasRootHalfCoordinate) {
  ProductTensor t(2, 2);
  t.set({0, 1}, 1.0);
  const AntiSymTensor a = antisymmetrize(t);
  EXPECT_NEAR(std::abs(a.coeff(0b11) - Complex{1.0 / std::sqrt(2.0), 0.0}), 0.0, kTight);
  // The symmetric product is annihilated.
  ProductTensor s(2, 2);
  s.set({0, 1}, 1.0);
  s.set({1, 0}, 1.0);
  EXPECT_TRUE(antisymmetrize(s).is_zero(kTight));
}

TEST(ApplyPermutation, PullsSlotContents) {
  // Rank-one product u (x) v: permuting with perm = (1, 0) must transpose
  // the factors.
  Rng rng(29);
  const Eigen::VectorXcd u = gaussian_vector(3, rng);
  const Eigen::VectorXcd v = gaussian_vector(3, rng);
  ProductTensor uv(3, 2);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) uv.set({i, j}, u(i) * v(j));
  }
  const ProductTensor swapped = apply_permutation(uv, {1, 0});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(std::abs(swapped.at({i, j}) - v(i) * u(j)), 0.0, kTight);
    }
  }
  EXPECT_THROW(apply_permutation(uv, {0, 0}), std::invalid_argument);
  EXPECT_THROW(apply_permutation(uv, {0}), std::invalid_argument);
}

TEST(ApplyPermutation, Composes) {
  Rng rng(31);
  const ProductTensor t = random_product_tensor(3, 3, rng);
  const std::vector<int> p{1, 2, 0};
  const std::vector<int> q{2, 1, 0};
  const ProductTensor lhs = apply_permutation(apply_permutation(t, p), q);
  // Applying p then q pulls entry m to t[m o q o p], so the one-shot
  // equivalent is composite[j] = q[p[j]].
  std::vector<int> composite(3);
  for (int i = 0; i < 3; ++i) composite[i] = q[static_cast<std::size_t>(p[i])];
  const ProductTensor rhs = apply_permutation(t, composite);
  EXPECT_LT((lhs.data() - rhs.data()).norm(), kTight);
}

TEST(ProductInner, MatchesVectorDot) {
  Rng rng(37);
  const ProductTensor a = random_product_tensor(3, 2, rng);
  const ProductTensor b = random_product_tensor(3, 2, rng);
  EXPECT_NEAR(std::abs(inner(a, b) - a.data().dot(b.data())), 0.0, kTight);
}

}  // namespace
}  // namespace fermereo
