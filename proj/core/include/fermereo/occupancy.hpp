#pragma once

#include <optional>

#include "fermereo/subspace.hpp"

namespace fermereo {

// Matrix-size guards for explicitly materialized projectors.
inline constexpr int kMaxMatrixDim = 1000;

// Projector, on the s-particle antisymmetric sector, onto states with
// exactly `occupancy` of the s particles inside the base subspace: the
// compression of sum over occupancy-subsets T of slots of
// (P on T) tensor (P-perp off T). Held as a dense matrix on the
// combination basis, ordered as combinations(dim, s).
class OccupancyProjector {
 public:
  // Requires 1 <= particles <= dim, 0 <= occupancy <= particles, and the
  // matrix dimension C(dim, particles) within kMaxMatrixDim (plus
  // dim^particles within the product-tensor cap for non-coordinate bases).
  OccupancyProjector(Subspace base, int particles, int occupancy,
                     double eps = kDefaultEps);

  const Subspace& base() const { return base_; }
  int particles() const { return particles_; }
  int occupancy() const { return occupancy_; }
  int dim() const { return base_.dim(); }

  const Eigen::MatrixXcd& matrix() const { return matrix_; }

  // Matrix action on combination coordinates; degree must equal particles().
  AntiSymTensor apply(const AntiSymTensor& v) const;

 private:
  Subspace base_;
  int particles_;
  int occupancy_;
  Eigen::MatrixXcd matrix_;
};

// Slot-wise application without materializing the dense matrix; agrees
// with OccupancyProjector::apply. This is the hot path for property checks.
AntiSymTensor apply_occupancy(const Subspace& base, int particles, int occupancy,
                              const AntiSymTensor& v, double eps = kDefaultEps);

// Loewner order on projectors: a <= b iff ab = ba = a within eps. Throws
// std::invalid_argument if either matrix fails to be a Hermitian idempotent
// within eps.
bool projector_leq(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                   double eps = kDefaultEps);

// The unique occupancy r with sigma_r(base) fixing `state`, if any: the
// occupancy projectors for fixed base are mutually orthogonal, so at most
// one can fix a unit state. `state` must be unit within eps.
std::optional<int> occupancy_of_state(const AntiSymTensor& state, const Subspace& base,
                                      double eps = kDefaultEps);

}  // namespace fermereo
