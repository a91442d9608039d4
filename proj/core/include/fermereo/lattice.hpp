#pragma once

#include <optional>
#include <span>

#include "fermereo/subspace.hpp"

namespace fermereo {

// Intersection, computed from the eigenspace of P_x + P_y at eigenvalue 2.
Subspace meet(const Subspace& x, const Subspace& y, double eps = kDefaultEps);

// Closed span of the union.
Subspace join(const Subspace& x, const Subspace& y, double eps = kDefaultEps);

// Orthogonal complement of x inside `ambient`; requires x <= ambient.
Subspace ortho_complement_in(const Subspace& x, const Subspace& ambient,
                             double eps = kDefaultEps);

// True iff inner <= outer as subspaces: P_outer P_inner = P_inner within eps.
bool contains(const Subspace& outer, const Subspace& inner, double eps = kDefaultEps);

// For x not contained in y: a nonzero z <= x with z meet y = 0, namely the
// complement of x meet y inside x. Throws if x <= y.
Subspace supplement_witness(const Subspace& x, const Subspace& y, double eps = kDefaultEps);

// For distinct lines x, y: the line through the phase-aligned unit sum of
// their generators. Lies inside join(x, y) but meets neither line.
Subspace skew_atom_witness(const Subspace& x, const Subspace& y, double eps = kDefaultEps);

// Least upper bound z of `items` such that every atom of z meets some
// member. Exists iff `items` has a maximum element, which is then returned;
// otherwise nullopt. Empty input throws.
std::optional<Subspace> fusion_of_set(std::span<const Subspace> items,
                                      double eps = kDefaultEps);

}  // namespace fermereo
