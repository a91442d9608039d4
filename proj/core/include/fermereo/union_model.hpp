#pragma once

#include <span>

#include "fermereo/axioms.hpp"

namespace fermereo {

// Finite union of subspaces, the domain extension in which mereological
// fusions of arbitrary finite families exist. Held in irredundant form: no
// part contained in another, deterministic part order.
class UnionObject {
 public:
  // Canonicalizes: drops redundant parts, sorts deterministically. Parts
  // must be nonzero and share one ambient dimension.
  explicit UnionObject(std::vector<Subspace> parts, double eps = kDefaultEps);

  static UnionObject single(const Subspace& part, double eps = kDefaultEps);

  int dim() const { return parts_.front().dim(); }
  const std::vector<Subspace>& parts() const { return parts_; }

  bool equals(const UnionObject& other, double eps = kDefaultEps) const;

 private:
  std::vector<Subspace> parts_;
};

// Set-theoretic containment of the underlying unions: every part of u lies
// inside some part of v. (A subspace inside a finite union of subspaces
// over the complex field lies inside one of them, so this part-wise test
// is exact.)
bool union_parthood(const UnionObject& u, const UnionObject& v, double eps = kDefaultEps);

// Nonempty intersection of the underlying unions: some pair of parts has
// nonzero meet.
bool union_overlap(const UnionObject& u, const UnionObject& v, double eps = kDefaultEps);

// Mereological fusion: the pooled parts, canonicalized. Satisfies
// "w overlaps the fusion iff w overlaps some member" for every w.
UnionObject union_fusion(std::span<const UnionObject> members, double eps = kDefaultEps);

// Closes the generators under subset fusions, interior atoms, and
// supplementation witnesses, then verifies partial order, strong
// supplementation, atomicity, and fusion existence over the whole closed
// domain. All verdicts should hold; failures carry notes.
AxiomReport union_submodel_check(const std::vector<UnionObject>& generators,
                                 const RunConfig& config);

}  // namespace fermereo
