#pragma once

#include <cstdint>
#include <vector>

namespace fermereo {

// An index combination i1 < i2 < ... < ir over modes {0, ..., d-1},
// encoded as a bitmask with bit i set iff mode i belongs to the tuple.
// The encoding makes the strict-ascent invariant unrepresentable.
using Mask = std::uint64_t;

// Mode count supported by the mask encoding.
inline constexpr int kMaxModes = 62;

// Exact C(n, k); returns 0 for k < 0 or k > n. Throws std::overflow_error
// if the value does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// All r-subsets of {0, ..., d-1} in ascending mask order (equivalently,
// colexicographic order of the ascending index tuples).
std::vector<Mask> combinations(int d, int r);

// Position of `mask` within combinations(d, popcount(mask)); inverse of
// indexing into that list. Independent of d.
std::size_t combination_rank(Mask mask);

// Ascending index tuple encoded by `mask`.
std::vector<int> mask_indices(Mask mask);

// Mask for a strictly ascending tuple; throws std::invalid_argument on
// repeats, descents, or indices outside [0, d-1].
Mask mask_from_indices(const std::vector<int>& indices, int d);

// Sign picked up when the concatenation of the ascending tuples of `a`
// and `b` is sorted back to ascending order. Requires a and b disjoint.
int merge_sign(Mask a, Mask b);

// +1 for even permutations, -1 for odd. `perm` must contain each of
// 0..n-1 exactly once.
int permutation_parity(const std::vector<int>& perm);

// True iff `perm` is a rearrangement of 0..perm.size()-1.
bool is_permutation(const std::vector<int>& perm);

}  // namespace fermereo
