#include "fermereo/axioms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fermereo {

bool verdict_pattern_classical(const AxiomReport& report) {
  const AxiomResult* po = find_axiom(report, kAxiomPartialOrder);
  const AxiomResult* ss = find_axiom(report, kAxiomStrongSupplementation);
  const AxiomResult* at = find_axiom(report, kAxiomAtomicity);
  const AxiomResult* uf = find_axiom(report, kAxiomUnrestrictedFusion);
  return po && ss && at && uf && po->holds && ss->holds && at->holds && !uf->holds;
}

const AxiomResult* find_axiom(const AxiomReport& report, const std::string& name) {
  for (const AxiomResult& r : report.axioms) {
    if (r.axiom == name) return &r;
  }
  return nullptr;
}

namespace {

// Drops subspace duplicates (projector equality) preserving order.
std::vector<Subspace> dedupe(const std::vector<Subspace>& items, double eps) {
  std::vector<Subspace> out;
  for (const Subspace& s : items) {
    bool seen = false;
    for (const Subspace& t : out) {
      if (s.equals(t, eps)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(s);
  }
  return out;
}

AxiomResult check_partial_order(const std::vector<Subspace>& objects, double eps) {
  AxiomResult result{kAxiomPartialOrder, true, 0, ""};
  const std::size_t n = objects.size();
  // le[i][j]: object i is part of object j.
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le[i][j] = contains(objects[j], objects[i], eps);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    ++result.cases;
    if (!le[i][i]) {
      result.holds = false;
      result.note = "reflexivity failed";
      return result;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++result.cases;
      if (le[i][j] && le[j][i] && !objects[i].equals(objects[j], eps)) {
        result.holds = false;
        result.note = "antisymmetry failed";
        return result;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++result.cases;
        if (le[j][k] && !le[i][k]) {
          result.holds = false;
          result.note = "transitivity failed";
          return result;
        }
      }
    }
  }
  return result;
}

AxiomResult check_strong_supplementation(const std::vector<Subspace>& objects, double eps) {
  AxiomResult result{kAxiomStrongSupplementation, true, 0, ""};
  for (const Subspace& x : objects) {
    for (const Subspace& y : objects) {
      if (contains(y, x, eps)) continue;
      ++result.cases;
      const Subspace z = supplement_witness(x, y, eps);
      const bool good = !z.is_zero() && contains(x, z, eps) && meet(z, y, eps).is_zero();
      if (!good) {
        result.holds = false;
        result.note = "constructed supplement failed verification";
        return result;
      }
    }
  }
  result.note = "every non-part pair yielded a verified disjoint supplement";
  return result;
}

AxiomResult check_atomicity(const std::vector<Subspace>& objects, double eps) {
  AxiomResult result{kAxiomAtomicity, true, 0, ""};
  for (const Subspace& x : objects) {
    ++result.cases;
    const Subspace atom = Subspace::line(x.generators().col(0), eps);
    if (atom.rank() != 1 || !contains(x, atom, eps)) {
      result.holds = false;
      result.note = "no rank-1 part found";
      return result;
    }
  }
  result.note = "every object carries a rank-1 part; rank-1 parts have no proper parts";
  return result;
}

}  // namespace

bool verify_fusion_refutation(const Assembly& assembly, const FusionWitness& witness,
                              double eps) {
  const int d = assembly.dim();
  if (witness.atom_a.size() != d || witness.atom_b.size() != d ||
      witness.skew_atom.size() != d) {
    return false;
  }
  if (!witness.atom_a.allFinite() || !witness.atom_b.allFinite() ||
      !witness.skew_atom.allFinite()) {
    return false;
  }
  if (witness.atom_a.norm() <= eps || witness.atom_b.norm() <= eps ||
      witness.skew_atom.norm() <= eps) {
    return false;
  }
  const Subspace a = Subspace::line(witness.atom_a, eps);
  const Subspace b = Subspace::line(witness.atom_b, eps);
  const Subspace w = Subspace::line(witness.skew_atom, eps);
  if (!contains(assembly.space(), a, eps) || !contains(assembly.space(), b, eps)) {
    return false;
  }
  if (a.equals(b, eps)) return false;
  const Subspace joined = join(a, b, eps);
  // The skew atom overlaps every upper bound of {a, b} but neither atom,
  // so no candidate can satisfy the fusion biconditional for this pair.
  return contains(joined, w, eps) && meet(w, a, eps).is_zero() && meet(w, b, eps).is_zero();
}

AxiomReport check_axioms(const Assembly& assembly, const SystemSampler& sampler,
                         const RunConfig& config) {
  config.validate();
  const double eps = config.epsilon;
  AxiomReport report;
  report.seed = config.seed;
  report.epsilon = eps;
  report.samples = config.samples;
  report.dim = assembly.dim();
  report.particles = assembly.particles();

  const std::vector<Subspace>& objects = sampler.objects;
  report.domain_size = objects.size();
  if (objects.empty()) throw std::invalid_argument("check_axioms: empty object domain");

  report.axioms.push_back(check_partial_order(objects, eps));
  report.axioms.push_back(check_strong_supplementation(objects, eps));
  report.axioms.push_back(check_atomicity(objects, eps));

  AxiomResult fusion{kAxiomUnrestrictedFusion, true, 0, ""};
  if (assembly.particles() < 2) {
    // One-atom domain: the only nonempty family is {Omega} and Omega fuses it.
    const std::vector<Subspace> unique = dedupe(objects, eps);
    bool all_ok = true;
    for (const Subspace& z : unique) {
      ++fusion.cases;
      all_ok = all_ok && z.equals(assembly.space(), eps);
    }
    fusion.holds = all_ok;
    fusion.note = "one-atom domain: every family is fused by the total system";
  } else {
    // Family {a, b} of distinct atoms: every candidate fusion either misses
    // an atom or contains their join and hence the skew atom, which
    // overlaps the candidate but neither family member.
    const Subspace a = Subspace::line(assembly.space().generators().col(0), eps);
    const Subspace b = Subspace::line(assembly.space().generators().col(1), eps);
    const Subspace skew = skew_atom_witness(a, b, eps);
    const Subspace joined = join(a, b, eps);

    std::vector<Subspace> candidates = objects;
    candidates.push_back(joined);
    bool refuted_all = true;
    for (const Subspace& z : candidates) {
      ++fusion.cases;
      bool refuted = false;
      if (!contains(z, a, eps)) {
        // w := a overlaps the family but not the candidate.
        refuted = meet(a, z, eps).is_zero();
      } else if (!contains(z, b, eps)) {
        refuted = meet(b, z, eps).is_zero();
      } else {
        // w := skew atom overlaps the candidate but no family member.
        refuted = !meet(skew, z, eps).is_zero() && meet(skew, a, eps).is_zero() &&
                  meet(skew, b, eps).is_zero();
      }
      if (!refuted) {
        refuted_all = false;
        break;
      }
    }
    FusionWitness witness{a.generators().col(0), b.generators().col(0),
                          skew.generators().col(0)};
    if (refuted_all && verify_fusion_refutation(assembly, witness, eps)) {
      fusion.holds = false;
      fusion.note = "no candidate satisfies the fusion biconditional for two distinct atoms";
      report.fusion_witness = witness;
    } else {
      fusion.holds = true;
      fusion.note = "refutation did not verify; see candidates";
    }
  }
  report.axioms.push_back(std::move(fusion));
  return report;
}

AxiomReport boolean_restriction(const Assembly& assembly, const Eigen::MatrixXcd& orthobasis,
                                double eps) {
  const int d = assembly.dim();
  const int n = assembly.particles();
  if (orthobasis.rows() != d || static_cast<int>(orthobasis.cols()) != n) {
    throw std::invalid_argument("boolean_restriction: basis shape mismatch");
  }
  const double tol = std::max(eps, 1e-8);
  const Eigen::MatrixXcd gram = orthobasis.adjoint() * orthobasis;
  if ((gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("boolean_restriction: basis is not orthonormal");
  }
  if (!Subspace::span_of(orthobasis, eps).equals(assembly.space(), tol)) {
    throw std::invalid_argument("boolean_restriction: basis does not span the assembly space");
  }
  if (n > 4) {
    throw std::invalid_argument(
        "boolean_restriction: exhaustive family enumeration supported for N <= 4");
  }

  // Domain: spans of nonempty basis subsets, indexed by subset mask.
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> masks;
  std::vector<Subspace> objects;
  for (Mask m = 1; m <= full; ++m) {
    Eigen::MatrixXcd cols(d, std::popcount(m));
    Eigen::Index c = 0;
    for (const int i : mask_indices(m)) cols.col(c++) = orthobasis.col(i);
    masks.push_back(m);
    objects.push_back(Subspace::span_of(cols, eps));
  }
  const std::size_t count = objects.size();

  AxiomReport report;
  report.seed = 0;
  report.epsilon = eps;
  report.samples = 0;
  report.dim = d;
  report.particles = n;
  report.domain_size = count;

  report.axioms.push_back(check_partial_order(objects, eps));
  report.axioms.push_back(check_strong_supplementation(objects, eps));
  report.axioms.push_back(check_atomicity(objects, eps));

  // Overlap bridge: verify numerically that meet rank equals the shared
  // index count on every pair, then sweep fusion families over the masks.
  bool bridge_ok = true;
  for (std::size_t i = 0; i < count && bridge_ok; ++i) {
    for (std::size_t j = 0; j < count && bridge_ok; ++j) {
      const int shared = std::popcount(masks[i] & masks[j]);
      // Objects are indexed by mask value minus one.
      bridge_ok = meet(objects[i], objects[j], eps).rank() == shared &&
                  join(objects[i], objects[j], eps)
                      .equals(objects[(masks[i] | masks[j]) - 1], eps);
    }
  }

  AxiomResult fusion{kAxiomUnrestrictedFusion, true, 0, ""};
  if (!bridge_ok) {
    fusion.holds = false;
    fusion.note = "coordinate overlap bridge failed numeric verification";
  } else {
    // Every nonempty family of objects: fusion candidate is the span of the
    // union of index sets; the overlap condition reduces to mask arithmetic.
    const std::size_t families = (std::size_t{1} << count) - 1;
    for (std::size_t f = 1; f <= families; ++f) {
      ++fusion.cases;
      Mask pooled = 0;
      for (std::size_t i = 0; i < count; ++i) {
        if ((f >> i) & 1U) pooled |= masks[i];
      }
      bool condition = true;
      for (std::size_t w = 0; w < count && condition; ++w) {
        const bool overlaps_fusion = (masks[w] & pooled) != 0;
        bool overlaps_member = false;
        for (std::size_t i = 0; i < count && !overlaps_member; ++i) {
          if ((f >> i) & 1U) overlaps_member = (masks[w] & masks[i]) != 0;
        }
        condition = (overlaps_fusion == overlaps_member);
      }
      if (!condition) {
        fusion.holds = false;
        fusion.note = "a family lacked a fusion in the restricted domain";
        break;
      }
    }
    if (fusion.holds) {
      fusion.note = "fusion of every family is the span of the pooled basis indices";
    }
  }
  report.axioms.push_back(std::move(fusion));

  // Boolean laws, fully numeric: distributivity both directions on all
  // triples, complement laws on all objects and pairs.
  AxiomResult distributivity{kAxiomDistributivity, true, 0, ""};
  for (std::size_t i = 0; i < count && distributivity.holds; ++i) {
    for (std::size_t j = 0; j < count && distributivity.holds; ++j) {
      for (std::size_t k = 0; k < count; ++k) {
        ++distributivity.cases;
        const Subspace& x = objects[i];
        const Subspace& y = objects[j];
        const Subspace& z = objects[k];
        const bool meet_over_join =
            meet(x, join(y, z, eps), eps).equals(join(meet(x, y, eps), meet(x, z, eps), eps),
                                                 eps);
        const bool join_over_meet =
            join(x, meet(y, z, eps), eps).equals(meet(join(x, y, eps), join(x, z, eps), eps),
                                                 eps);
        if (!meet_over_join || !join_over_meet) {
          distributivity.holds = false;
          distributivity.note = "distributive law failed on a triple";
          break;
        }
      }
    }
  }
  report.axioms.push_back(std::move(distributivity));

  AxiomResult complementation{kAxiomComplementation, true, 0, ""};
  const Subspace& top = objects[count - 1];
  for (std::size_t i = 0; i < count && complementation.holds; ++i) {
    ++complementation.cases;
    const Subspace comp = ortho_complement_in(objects[i], top, eps);
    const bool laws = join(objects[i], comp, eps).equals(top, eps) &&
                      meet(objects[i], comp, eps).is_zero() &&
                      (masks[i] == full || comp.equals(objects[(full & ~masks[i]) - 1], eps));
    if (!laws) {
      complementation.holds = false;
      complementation.note = "complement law failed";
    }
  }
  report.axioms.push_back(std::move(complementation));

  return report;
}

}  // namespace fermereo
