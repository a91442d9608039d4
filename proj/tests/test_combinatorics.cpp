#include "fermereo/combinatorics.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace fermereo {
namespace {

TEST(Binomial, KnownValues) {
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 5), 1u);
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(52, 5), 2'598'960u);
  EXPECT_EQ(binomial(62, 31), 465428353255261088ull);
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(binomial(4, 5), 0u);
  EXPECT_EQ(binomial(4, -1), 0u);
}

TEST(Binomial, PascalIdentity) {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 1; k <= n; ++k) {
      EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST(Binomial, OverflowThrows) { EXPECT_THROW(binomial(128, 64), std::overflow_error); }

TEST(Combinations, CountOrderAndPopcount) {
  for (int d = 0; d <= 10; ++d) {
    for (int r = 0; r <= d; ++r) {
      const std::vector<Mask> all = combinations(d, r);
      ASSERT_EQ(all.size(), binomial(d, r));
      for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(std::popcount(all[k]), r);
        EXPECT_LT(all[k], Mask{1} << d);
        if (k > 0) {
          EXPECT_LT(all[k - 1], all[k]);
        }
      }
    }
  }
}

TEST(Combinations, RankIsPositionInAscendingOrder) {
  for (int d = 1; d <= 10; ++d) {
    for (int r = 0; r <= d; ++r) {
      const std::vector<Mask> all = combinations(d, r);
      for (std::size_t k = 0; k < all.size(); ++k) {
        EXPECT_EQ(combination_rank(all[k]), k);
      }
    }
  }
}

TEST(MaskCodec, RoundTrip) {
  for (int d = 1; d <= 8; ++d) {
    for (Mask m = 0; m < (Mask{1} << d); ++m) {
      EXPECT_EQ(mask_from_indices(mask_indices(m), d), m);
    }
  }
}

TEST(MaskCodec, RejectsBadTuples) {
  EXPECT_THROW(mask_from_indices({1, 1}, 4), std::invalid_argument);
  EXPECT_THROW(mask_from_indices({2, 1}, 4), std::invalid_argument);
  EXPECT_THROW(mask_from_indices({0, 4}, 4), std::invalid_argument);
  EXPECT_THROW(mask_from_indices({-1}, 4), std::invalid_argument);
}

TEST(MergeSign, HandComputedCases) {
  // e1 before e2 needs no swap; e2 before e1 needs one.
  EXPECT_EQ(merge_sign(0b01, 0b10), 1);
  EXPECT_EQ(merge_sign(0b10, 0b01), -1);
  // (e2 e3) merged after e1: no inversions.
  EXPECT_EQ(merge_sign(0b001, 0b110), 1);
  // e3 then (e1 e2): both of b sit below the single a index: two swaps.
  EXPECT_EQ(merge_sign(0b100, 0b011), 1);
  // (e1 e3) then e2: one b index below one a index.
  EXPECT_EQ(merge_sign(0b101, 0b010), -1);
}

TEST(MergeSign, RejectsOverlap) { EXPECT_THROW(merge_sign(0b011, 0b110), std::invalid_argument); }

// Concatenating three disjoint blocks and sorting must give the same sign
// whichever pair is merged first; this is what makes the wedge associative.
TEST(MergeSign, AssociativityCocycle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const Mask bits = rng() & ((Mask{1} << 12) - 1);
    // Split the set bits of `bits` into three disjoint masks at random.
    Mask a = 0, b = 0, c = 0;
    for (int i = 0; i < 12; ++i) {
      if (((bits >> i) & 1U) == 0) continue;
      switch (rng() % 3) {
        case 0: a |= Mask{1} << i; break;
        case 1: b |= Mask{1} << i; break;
        default: c |= Mask{1} << i; break;
      }
    }
    const int left = merge_sign(a, b) * merge_sign(a | b, c);
    const int right = merge_sign(b, c) * merge_sign(a, b | c);
    EXPECT_EQ(left, right);
  }
}

TEST(MergeSign, MatchesInversionCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const Mask a = rng() & ((Mask{1} << 10) - 1);
    const Mask b = rng() & ((Mask{1} << 10) - 1) & ~a;
    long inversions = 0;
    for (int i : mask_indices(a)) {
      for (int j : mask_indices(b)) {
        if (j < i) ++inversions;
      }
    }
    EXPECT_EQ(merge_sign(a, b), inversions % 2 == 0 ? 1 : -1);
  }
}

TEST(PermutationParity, KnownAndComposition) {
  EXPECT_EQ(permutation_parity({0, 1, 2}), 1);
  EXPECT_EQ(permutation_parity({1, 0, 2}), -1);
  EXPECT_EQ(permutation_parity({1, 2, 0}), 1);
  EXPECT_EQ(permutation_parity({2, 1, 0}), -1);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> s(7), t(7);
    std::iota(s.begin(), s.end(), 0);
    std::iota(t.begin(), t.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(t.begin(), t.end(), rng);
    std::vector<int> st(7);
    for (int i = 0; i < 7; ++i) st[i] = s[t[i]];
    EXPECT_EQ(permutation_parity(st), permutation_parity(s) * permutation_parity(t));
  }
}

TEST(PermutationParity, IsPermutationGuard) {
  EXPECT_TRUE(is_permutation({2, 0, 1}));
  EXPECT_FALSE(is_permutation({0, 0, 1}));
  EXPECT_FALSE(is_permutation({0, 3, 1}));
}

}  // namespace
}  // namespace fermereo
