#include "fermereo/lattice.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "fermereo/rng.hpp"
#include "oracles.hpp"

namespace fermereo {
namespace {

constexpr double kEps = 1e-9;

Subspace coord(int dim, Mask axes) { return Subspace::coordinate(dim, axes); }

TEST(SubspaceBasics, ConstructorsAndPredicates) {
  const Subspace z = Subspace::zero(3);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.rank(), 0);
  const Subspace f = Subspace::full(3);
  EXPECT_EQ(f.rank(), 3);
  EXPECT_TRUE(coord(4, 0b0101).is_coordinate());
  EXPECT_EQ(coord(4, 0b0101).coordinate_axes(), Mask{0b0101});
  Eigen::VectorXcd diag(2);
  diag << 1.0, 1.0;
  EXPECT_FALSE(Subspace::line(diag).is_coordinate());
  EXPECT_THROW(Subspace::line(Eigen::VectorXcd::Zero(2)), std::invalid_argument);
}

TEST(SubspaceBasics, SpanOfDropsDependentColumns) {
  Eigen::MatrixXcd cols(3, 3);
  cols.col(0) << 1.0, 0.0, 0.0;
  cols.col(1) << 2.0, 0.0, 0.0;
  cols.col(2) << 0.0, 1.0, 0.0;
  const Subspace s = Subspace::span_of(cols);
  EXPECT_EQ(s.rank(), 2);
  EXPECT_TRUE(s.equals(coord(3, 0b011), kEps));
  // Generators are orthonormal.
  const Eigen::MatrixXcd gram = s.generators().adjoint() * s.generators();
  EXPECT_LT((gram - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MeetJoin, CoordinateSubspacesFollowMaskAlgebra) {
  const int d = 5;
  Rng rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Mask a = rng() & ((Mask{1} << d) - 1);
    const Mask b = rng() & ((Mask{1} << d) - 1);
    EXPECT_TRUE(meet(coord(d, a), coord(d, b), kEps).equals(coord(d, a & b), kEps));
    EXPECT_TRUE(join(coord(d, a), coord(d, b), kEps).equals(coord(d, a | b), kEps));
  }
}

TEST(MeetJoin, AgreeWithSvdOracles) {
  Rng rng(61);
  for (int trial = 0; trial < 120; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 5);
    const int ra = 1 + static_cast<int>(rng() % d);
    const int rb = 1 + static_cast<int>(rng() % d);
    // Mix independent and deliberately intersecting pairs.
    Subspace x = random_subspace(d, ra, rng);
    Subspace y = random_subspace(d, rb, rng);
    if (trial % 3 == 0 && ra >= 2) {
      // Force a shared line to exercise nontrivial meets.
      Eigen::MatrixXcd my(d, rb);
      my.col(0) = x.generators().col(0);
      for (int c = 1; c < rb; ++c) my.col(c) = gaussian_vector(d, rng);
      y = Subspace::span_of(my, kEps);
      if (y.rank() != rb) continue;
    }
    EXPECT_TRUE(meet(x, y, kEps).equals(oracle::oracle_meet(x, y, kEps), 1e-7));
    EXPECT_TRUE(join(x, y, kEps).equals(oracle::oracle_join(x, y, kEps), 1e-7));
  }
}

TEST(MeetJoin, LatticeLaws) {
  Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const Subspace x = random_subspace(d, 1 + static_cast<int>(rng() % d), rng);
    const Subspace y = random_subspace(d, 1 + static_cast<int>(rng() % d), rng);
    const Subspace z = random_subspace(d, 1 + static_cast<int>(rng() % d), rng);
    // Commutativity and idempotence.
    EXPECT_TRUE(meet(x, y, kEps).equals(meet(y, x, kEps), 1e-8));
    EXPECT_TRUE(join(x, y, kEps).equals(join(y, x, kEps), 1e-8));
    EXPECT_TRUE(meet(x, x, kEps).equals(x, 1e-8));
    EXPECT_TRUE(join(x, x, kEps).equals(x, 1e-8));
    // Absorption.
    EXPECT_TRUE(meet(x, join(x, y, kEps), kEps).equals(x, 1e-8));
    EXPECT_TRUE(join(x, meet(x, y, kEps), kEps).equals(x, 1e-8));
    // Associativity of join (meet associativity follows on complements).
    EXPECT_TRUE(join(join(x, y, kEps), z, kEps).equals(join(x, join(y, z, kEps), kEps), 1e-8));
    // Monotone envelope: meet below both, join above both.
    EXPECT_TRUE(contains(x, meet(x, y, kEps), 1e-8));
    EXPECT_TRUE(contains(join(x, y, kEps), x, 1e-8));
  }
}

TEST(MeetJoin, Orthomodularity) {
  Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const Subspace y = random_subspace(d, 2 + static_cast<int>(rng() % (d - 1)), rng);
    const Subspace x = random_subspace_within(y, 1 + static_cast<int>(rng() % y.rank()), rng);
    const Subspace x_perp = ortho_complement_in(x, Subspace::full(d), kEps);
    EXPECT_TRUE(join(x, meet(y, x_perp, kEps), kEps).equals(y, 1e-8));
  }
}

TEST(MeetJoin, DistributivityFailsOnTheDiagonalLine) {
  Eigen::VectorXcd up(2), down(2), right(2);
  up << 1.0, 0.0;
  down << 0.0, 1.0;
  right << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Subspace x = Subspace::line(right);
  const Subspace lhs = meet(x, join(Subspace::line(up), Subspace::line(down), kEps), kEps);
  const Subspace rhs = join(meet(x, Subspace::line(up), kEps),
                            meet(x, Subspace::line(down), kEps), kEps);
  EXPECT_TRUE(lhs.equals(x, kEps));
  EXPECT_TRUE(rhs.is_zero());
}

TEST(Contains, MatchesLeastSquaresOracle) {
  Rng rng(73);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const Subspace outer = random_subspace(d, 1 + static_cast<int>(rng() % d), rng);
    const Subspace inside = random_subspace_within(outer, 1 + static_cast<int>(rng() % outer.rank()), rng);
    EXPECT_TRUE(contains(outer, inside, kEps));
    EXPECT_TRUE(oracle::oracle_contains(outer, inside, 1e-7));
    if (outer.rank() < d) {
      const Subspace stranger = random_subspace(d, 1, rng);
      EXPECT_EQ(contains(outer, stranger, kEps),
                oracle::oracle_contains(outer, stranger, kEps));
    }
  }
  EXPECT_TRUE(contains(coord(3, 0b011), Subspace::zero(3), kEps));
}

TEST(OrthoComplement, SplitsTheAmbient) {
  Rng rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const Subspace ambient = random_subspace(d, 2 + static_cast<int>(rng() % (d - 1)), rng);
    const Subspace x = random_subspace_within(ambient, 1 + static_cast<int>(rng() % ambient.rank()), rng);
    const Subspace c = ortho_complement_in(x, ambient, kEps);
    EXPECT_EQ(c.rank(), ambient.rank() - x.rank());
    EXPECT_TRUE(meet(c, x, kEps).is_zero());
    EXPECT_TRUE(join(c, x, kEps).equals(ambient, 1e-8));
    // Orthogonality, not mere disjointness.
    if (!c.is_zero() && !x.is_zero()) {
      EXPECT_LT((c.generators().adjoint() * x.generators()).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
  EXPECT_THROW(ortho_complement_in(coord(3, 0b011), coord(3, 0b100), kEps),
               std::invalid_argument);
  // Complement of a space inside itself collapses to zero rather than
  // picking up rounding noise.
  Rng rng2(81);
  const Subspace whole = random_subspace(4, 3, rng2);
  EXPECT_TRUE(ortho_complement_in(whole, whole, kEps).is_zero());
}

TEST(SupplementWitness, DisjointRemainderInsideX) {
  Rng rng(83);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 3);
    const Subspace x = random_subspace(d, 2 + static_cast<int>(rng() % (d - 1)), rng);
    const Subspace y = random_subspace(d, 1 + static_cast<int>(rng() % (d - 1)), rng);
    if (contains(y, x, kEps)) continue;
    const Subspace z = supplement_witness(x, y, kEps);
    EXPECT_FALSE(z.is_zero());
    EXPECT_TRUE(contains(x, z, 1e-8));
    EXPECT_TRUE(meet(z, y, kEps).is_zero());
  }
  // When x is part of y no supplement exists.
  EXPECT_THROW(supplement_witness(coord(3, 0b001), coord(3, 0b011), kEps),
               std::invalid_argument);
}

TEST(SkewAtomWitness, InsideJoinMissingBothLines) {
  Rng rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const Subspace u = random_subspace(d, 1, rng);
    const Subspace v = random_subspace(d, 1, rng);
    if (u.equals(v, 1e-6)) continue;
    const Subspace w = skew_atom_witness(u, v, kEps);
    EXPECT_EQ(w.rank(), 1);
    EXPECT_TRUE(contains(join(u, v, kEps), w, 1e-8));
    EXPECT_TRUE(meet(w, u, kEps).is_zero());
    EXPECT_TRUE(meet(w, v, kEps).is_zero());
  }
  EXPECT_THROW(skew_atom_witness(coord(3, 0b011), coord(3, 0b100), kEps),
               std::invalid_argument);
}

TEST(FusionOfSet, ReturnsTheMaximumExactlyWhenOneExists) {
  const int d = 4;
  // Chain with a maximum.
  const std::array<Subspace, 3> chain{coord(d, 0b0001), coord(d, 0b0011), coord(d, 0b0111)};
  const std::optional<Subspace> fused = fusion_of_set(chain, kEps);
  ASSERT_TRUE(fused.has_value());
  EXPECT_TRUE(fused->equals(coord(d, 0b0111), kEps));

  // Antichain: no member contains the others.
  const std::array<Subspace, 2> split{coord(d, 0b0001), coord(d, 0b0010)};
  EXPECT_FALSE(fusion_of_set(split, kEps).has_value());

  // Singleton fuses to itself; empty families are rejected.
  const std::array<Subspace, 1> one{coord(d, 0b0101)};
  EXPECT_TRUE(fusion_of_set(one, kEps)->equals(coord(d, 0b0101), kEps));
  EXPECT_THROW(fusion_of_set(std::span<const Subspace>{}, kEps), std::invalid_argument);
}

TEST(FusionOfSet, AgreesWithDefinitionDrivenOracle) {
  Rng rng(97);
  Rng oracle_rng(197);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 3);
    const int count = 1 + static_cast<int>(rng() % 4);
    std::vector<Subspace> family;
    for (int k = 0; k < count; ++k) {
      family.push_back(random_subspace(d, 1 + static_cast<int>(rng() % d), rng));
    }
    if (trial % 2 == 0) {
      // Give half the trials an explicit upper bound member.
      Subspace top = family[0];
      for (const Subspace& s : family) top = join(top, s, kEps);
      family.push_back(top);
    }
    const std::optional<Subspace> mine = fusion_of_set(family, kEps);
    const std::optional<Subspace> ref = oracle::oracle_fusion(family, oracle_rng, kEps);
    ASSERT_EQ(mine.has_value(), ref.has_value());
    if (mine.has_value()) {
      EXPECT_TRUE(mine->equals(*ref, 1e-7));
    }
  }
}

}  // namespace
}  // namespace fermereo
