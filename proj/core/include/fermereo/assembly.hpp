#pragma once

#include <stdexcept>
#include <vector>

#include "fermereo/config.hpp"
#include "fermereo/lattice.hpp"
#include "fermereo/occupancy.hpp"
#include "fermereo/rng.hpp"

namespace fermereo {

// Raised when a total state fails the decomposability requirement; callers
// distinguish this domain violation from ordinary input errors.
struct GmwEntangledError : std::domain_error {
  using std::domain_error::domain_error;
};

// A fixed N-fermion total system: unit decomposable degree-N state plus
// its rank-N one-body support (the total system-space).
class Assembly {
 public:
  // Wedge of an orthonormalization of N independent unit vectors.
  static Assembly from_vectors(const std::vector<Eigen::VectorXcd>& vectors,
                               double eps = kDefaultEps);

  // Adopts a given unit state; throws std::domain_error when the state is
  // GMW-entangled (not decomposable), since such a total state admits no
  // system-space.
  static Assembly from_state(const AntiSymTensor& omega, double eps = kDefaultEps);

  int dim() const { return space_.dim(); }
  int particles() const { return space_.rank(); }
  const AntiSymTensor& state() const { return state_; }
  const Subspace& space() const { return space_; }

 private:
  Assembly(Subspace space, AntiSymTensor state);

  Subspace space_;
  AntiSymTensor state_;
};

// A non-GMW-entangled subsystem, identified with a nonzero subspace of the
// total system-space; its state is the unit wedge over that subspace.
// GMW-entangled "systems" are unrepresentable by construction.
struct SystemObject {
  Subspace space;
  AntiSymTensor state;

  int degree() const { return space.rank(); }
};

// Validates nonzero and containment in the assembly's space.
SystemObject make_system(const Assembly& assembly, const Subspace& space,
                         double eps = kDefaultEps);

// Finite stand-in for the quantifier over all one-body subspaces:
// subspaces spanned by subsets of the assembly's orthonormal basis, the
// full one-particle space, plus seeded random subspaces of every rank.
struct ProjectorSampler {
  std::vector<Subspace> probes;
};
ProjectorSampler make_projector_sampler(const Assembly& assembly, const RunConfig& config);

// Finite object domain for axiom sweeps: basis-subset subspaces of the
// assembly space plus seeded random subspaces within it, every rank.
struct SystemSampler {
  std::vector<Subspace> objects;
};
SystemSampler make_system_sampler(const Assembly& assembly, const RunConfig& config);

// Eigenvalue-1 eigenstate check ("x has property Q"): true iff the state
// degree matches the projector's particle count and Q fixes the state
// within eps. A degree mismatch is "predicate does not apply", i.e. false.
bool has_property(const AntiSymTensor& state, const OccupancyProjector& q,
                  double eps = kDefaultEps);

// Same check without materializing the projector matrix.
bool has_property(const AntiSymTensor& state, const Subspace& base, int particles,
                  int occupancy, double eps = kDefaultEps);

// Occupancy-profile definition of parthood: x is part of y iff for every
// probe P and every particle count s, "all s constituents of y inside P"
// implies "all r constituents of x inside P" for some r <= s. Evaluated
// over the sampler probes plus both argument spaces; with those adapted
// probes included, the result agrees with subspace containment.
bool parthood_definitional(const SystemObject& x, const SystemObject& y,
                           const Assembly& assembly, const ProjectorSampler& sampler,
                           double eps = kDefaultEps);

// Identity as indiscernibility: x equals y iff their property profiles
// agree across the sampled probes (all particle counts and occupancies).
// Agrees with space equality once the argument spaces join the probes.
bool identity_by_profile(const SystemObject& x, const SystemObject& y,
                         const Assembly& assembly, const ProjectorSampler& sampler,
                         double eps = kDefaultEps);

// Verifies the subsystem existence and uniqueness biconditionals for one
// probe subspace and degree r:
//   "at least r of N constituents in P"  <->  some system with all r
//                                              constituents in P, and
//   "exactly r of N constituents in P"   <->  exactly one such system.
// Witnesses on the right-hand sides are constructed from meet(P, space)
// and re-verified rather than assumed. Both hold whenever rank(P) = r;
// the wide-probe cases can fail honestly and are reported as false.
bool subsystem_existence_check(const Assembly& assembly, const Subspace& p, int r,
                               double eps = kDefaultEps);

// `count` pairwise-distinct rank-1 parts of the assembly, parameterized by
// angle inside a fixed 2-plane of the assembly space. Requires N >= 2 and
// count >= 1.
std::vector<SystemObject> distinct_atom_family(const Assembly& assembly, int count,
                                               double eps = kDefaultEps);

}  // namespace fermereo
