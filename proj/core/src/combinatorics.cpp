#include "fermereo/combinatorics.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace fermereo {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t numer = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / numer) {
      throw std::overflow_error("binomial: value exceeds 64 bits");
    }
    result = result * numer / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::vector<Mask> combinations(int d, int r) {
  if (d < 0 || d > kMaxModes) throw std::invalid_argument("combinations: d out of range");
  if (r < 0 || r > d) return {};
  std::vector<Mask> out;
  out.reserve(static_cast<std::size_t>(binomial(d, r)));
  if (r == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack: next mask with the same popcount, ascending order.
  Mask mask = (Mask{1} << r) - 1;
  const Mask limit = Mask{1} << d;
  while (mask < limit) {
    out.push_back(mask);
    const Mask low = mask & (~mask + 1);
    const Mask ripple = mask + low;
    mask = ripple | (((mask ^ ripple) >> 2) / low);
  }
  return out;
}

std::size_t combination_rank(Mask mask) {
  // Colexicographic rank: sum over the j-th smallest index i_j of C(i_j, j+1).
  std::size_t rank = 0;
  int j = 0;
  while (mask != 0) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    rank += static_cast<std::size_t>(binomial(i, ++j));
  }
  return rank;
}

std::vector<int> mask_indices(Mask mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

Mask mask_from_indices(const std::vector<int>& indices, int d) {
  if (d < 0 || d > kMaxModes) throw std::invalid_argument("mask_from_indices: d out of range");
  Mask mask = 0;
  int prev = -1;
  for (const int i : indices) {
    if (i <= prev) throw std::invalid_argument("mask_from_indices: indices must strictly ascend");
    if (i < 0 || i >= d) {
      throw std::invalid_argument("mask_from_indices: index " + std::to_string(i) +
                                  " outside [0, " + std::to_string(d - 1) + "]");
    }
    mask |= Mask{1} << i;
    prev = i;
  }
  return mask;
}

int merge_sign(Mask a, Mask b) {
  if ((a & b) != 0) throw std::invalid_argument("merge_sign: masks overlap");
  // Each b-index below an a-index contributes one transposition.
  int inversions = 0;
  Mask rest = b;
  while (rest != 0) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    const Mask above = a >> (i + 1);
    inversions += std::popcount(above << (i + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

bool is_permutation(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<bool> seen(perm.size(), false);
  for (const int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  return true;
}

int permutation_parity(const std::vector<int>& perm) {
  if (!is_permutation(perm)) throw std::invalid_argument("permutation_parity: not a permutation");
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace fermereo
