#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fermereo/assembly.hpp"

namespace fermereo {

// Raw vectors backing a fusion-failure counterexample: two distinct atoms
// and the skew atom inside their span that overlaps any common upper bound
// while overlapping neither atom. Stored as plain coordinates so a report
// reader can re-run the refutation.
struct FusionWitness {
  Eigen::VectorXcd atom_a;
  Eigen::VectorXcd atom_b;
  Eigen::VectorXcd skew_atom;
};

inline constexpr const char* kAxiomPartialOrder = "partial-order";
inline constexpr const char* kAxiomStrongSupplementation = "strong-supplementation";
inline constexpr const char* kAxiomAtomicity = "atomicity";
inline constexpr const char* kAxiomUnrestrictedFusion = "unrestricted-fusion";
inline constexpr const char* kAxiomDistributivity = "distributivity";
inline constexpr const char* kAxiomComplementation = "complementation";
inline constexpr const char* kAxiomFusionExistence = "fusion-existence";

struct AxiomResult {
  std::string axiom;
  bool holds = false;
  std::uint64_t cases = 0;
  std::string note;
};

// Outcome of one axiom sweep; a failing verdict always carries a
// machine-checkable witness.
struct AxiomReport {
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  int samples = 0;
  int dim = 0;
  int particles = 0;
  std::uint64_t domain_size = 0;
  std::vector<AxiomResult> axioms;
  std::optional<FusionWitness> fusion_witness;
};

// True iff the report shows the classical-minus-fusion pattern: partial
// order, strong supplementation, and atomicity hold while unrestricted
// fusion fails.
bool verdict_pattern_classical(const AxiomReport& report);

const AxiomResult* find_axiom(const AxiomReport& report, const std::string& name);

// Sweeps the four classical axioms over the sampled object domain.
// Parthood is subspace containment (the tested equivalent of the
// occupancy-profile definition). Partial order and atomicity are checked
// by enumeration, strong supplementation constructively via
// supplement_witness, and unrestricted fusion by refuting every candidate
// fusion of two distinct atoms with an explicit witness.
AxiomReport check_axioms(const Assembly& assembly, const SystemSampler& sampler,
                         const RunConfig& config);

// Re-runs a fusion refutation from raw vectors: both atoms lie in the
// assembly space and are distinct, the skew atom lies in their join yet
// meets neither, so no domain element can satisfy the fusion condition for
// the pair. Returns false if any step fails.
bool verify_fusion_refutation(const Assembly& assembly, const FusionWitness& witness,
                              double eps = kDefaultEps);

// Restriction of the domain to spans of nonempty subsets of one preferred
// orthobasis of the assembly space: a Boolean algebra with 2^N - 1
// elements. Verifies the four axioms exhaustively (fusion now exists:
// the span of the index-set union) plus distributivity and complement
// laws. Throws std::invalid_argument unless `orthobasis` has orthonormal
// columns spanning the assembly space.
AxiomReport boolean_restriction(const Assembly& assembly,
                                const Eigen::MatrixXcd& orthobasis,
                                double eps = kDefaultEps);

}  // namespace fermereo
