#include "fermereo/union_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "fermereo/rng.hpp"

namespace fermereo {

namespace {

// Deterministic part order: rank first, then projector entries.
bool part_before(const Subspace& a, const Subspace& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  const Eigen::MatrixXcd& pa = a.projector();
  const Eigen::MatrixXcd& pb = b.projector();
  for (Eigen::Index r = 0; r < pa.rows(); ++r) {
    for (Eigen::Index c = 0; c < pa.cols(); ++c) {
      if (pa(r, c).real() != pb(r, c).real()) return pa(r, c).real() < pb(r, c).real();
      if (pa(r, c).imag() != pb(r, c).imag()) return pa(r, c).imag() < pb(r, c).imag();
    }
  }
  return false;
}

}  // namespace

UnionObject::UnionObject(std::vector<Subspace> parts, double eps) {
  if (parts.empty()) throw std::invalid_argument("UnionObject: no parts");
  const int d = parts.front().dim();
  for (const Subspace& p : parts) {
    if (p.dim() != d) throw std::invalid_argument("UnionObject: dim mismatch");
    if (p.is_zero()) throw std::invalid_argument("UnionObject: zero part");
  }
  // Irredundant form: drop any part contained in another (keeping the
  // first of equal pairs).
  std::vector<bool> dropped(parts.size(), false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (dropped[i]) continue;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j || dropped[j]) continue;
      if (contains(parts[j], parts[i], eps) &&
          !(parts[i].equals(parts[j], eps) && i < j)) {
        dropped[i] = true;
        break;
      }
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!dropped[i]) parts_.push_back(std::move(parts[i]));
  }
  std::sort(parts_.begin(), parts_.end(), part_before);
}

UnionObject UnionObject::single(const Subspace& part, double eps) {
  return UnionObject(std::vector<Subspace>{part}, eps);
}

bool UnionObject::equals(const UnionObject& other, double eps) const {
  if (parts_.size() != other.parts_.size()) return false;
  // Parts are pairwise incomparable, so matching is one-to-one.
  for (const Subspace& p : parts_) {
    bool matched = false;
    for (const Subspace& q : other.parts_) {
      if (p.equals(q, eps)) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool union_parthood(const UnionObject& u, const UnionObject& v, double eps) {
  for (const Subspace& p : u.parts()) {
    bool inside = false;
    for (const Subspace& q : v.parts()) {
      if (contains(q, p, eps)) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

bool union_overlap(const UnionObject& u, const UnionObject& v, double eps) {
  for (const Subspace& p : u.parts()) {
    for (const Subspace& q : v.parts()) {
      if (!meet(p, q, eps).is_zero()) return true;
    }
  }
  return false;
}

UnionObject union_fusion(std::span<const UnionObject> members, double eps) {
  if (members.empty()) throw std::invalid_argument("union_fusion: empty family");
  std::vector<Subspace> pooled;
  for (const UnionObject& m : members) {
    for (const Subspace& p : m.parts()) pooled.push_back(p);
  }
  return UnionObject(std::move(pooled), eps);
}

namespace {

// A line inside `p` meeting none of `avoid`; exists whenever p is not
// contained in any avoid member (the excluded sets are proper subspaces of
// p). Tries generator columns, fixed mixes, then seeded random mixes.
Subspace interior_atom_avoiding(const Subspace& p, const std::vector<Subspace>& avoid,
                                double eps, Rng& rng) {
  const auto clear_of_all = [&](const Subspace& line) {
    for (const Subspace& q : avoid) {
      if (!meet(line, q, eps).is_zero()) return false;
    }
    return true;
  };
  std::vector<Eigen::VectorXcd> candidates;
  for (Eigen::Index c = 0; c < p.generators().cols(); ++c) {
    candidates.push_back(p.generators().col(c));
  }
  for (Eigen::Index c = 1; c < p.generators().cols(); ++c) {
    candidates.push_back(p.generators().col(0) + p.generators().col(c));
    candidates.push_back(p.generators().col(0) - p.generators().col(c));
    candidates.push_back(p.generators().col(0) + Complex{0.0, 1.0} * p.generators().col(c));
  }
  for (int i = 0; i < 64; ++i) {
    candidates.push_back(p.generators() * gaussian_vector(p.rank(), rng));
  }
  for (const Eigen::VectorXcd& v : candidates) {
    if (v.norm() <= eps) continue;
    const Subspace line = Subspace::line(v, eps);
    if (clear_of_all(line)) return line;
  }
  throw std::logic_error("interior_atom_avoiding: no clear atom found");
}

}  // namespace

AxiomReport union_submodel_check(const std::vector<UnionObject>& generators,
                                 const RunConfig& config) {
  config.validate();
  const double eps = config.epsilon;
  if (generators.empty()) throw std::invalid_argument("union_submodel_check: no generators");
  if (generators.size() > 6) {
    throw std::invalid_argument("union_submodel_check: more than 6 generators");
  }
  const int d = generators.front().dim();
  for (const UnionObject& g : generators) {
    if (g.dim() != d) throw std::invalid_argument("union_submodel_check: dim mismatch");
  }

  std::vector<UnionObject> domain;
  const auto add = [&](const UnionObject& obj) -> std::size_t {
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (domain[i].equals(obj, eps)) return i;
    }
    domain.push_back(obj);
    return domain.size() - 1;
  };

  for (const UnionObject& g : generators) add(g);

  // Fusions of every nonempty generator subset; each is a family whose
  // fusion existence gets verified at the end.
  std::vector<std::pair<std::vector<UnionObject>, UnionObject>> families;
  const Mask full = (Mask{1} << generators.size()) - 1;
  for (Mask subset = 1; subset <= full; ++subset) {
    std::vector<UnionObject> family;
    for (const int i : mask_indices(subset)) family.push_back(generators[i]);
    UnionObject fused = union_fusion(family, eps);
    add(fused);
    families.emplace_back(std::move(family), std::move(fused));
  }

  // Sampled families over the current domain.
  Rng rng(config.seed);
  const int extra = std::min(config.samples, 16);
  for (int i = 0; i < extra; ++i) {
    const std::size_t size = 2 + static_cast<std::size_t>(i % 3);
    std::vector<UnionObject> family;
    for (std::size_t k = 0; k < size; ++k) {
      family.push_back(domain[rng() % domain.size()]);
    }
    UnionObject fused = union_fusion(family, eps);
    add(fused);
    families.emplace_back(std::move(family), std::move(fused));
  }

  // Closure: interior atoms for every part, supplementation witnesses for
  // every non-parthood pair. Atoms are self-witnessing, so this reaches a
  // fixpoint quickly; the round cap guards the claim.
  bool changed = true;
  int rounds = 0;
  while (changed) {
    if (++rounds > 10) throw std::logic_error("union_submodel_check: closure did not settle");
    changed = false;

    const std::size_t snapshot = domain.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      for (const Subspace& p : domain[i].parts()) {
        if (p.rank() == 1) {
          if (add(UnionObject::single(p, eps)) >= snapshot) changed = true;
          continue;
        }
        for (int c = 0; c < 2; ++c) {
          const Subspace atom = Subspace::line(p.generators().col(c), eps);
          if (add(UnionObject::single(atom, eps)) >= snapshot) changed = true;
        }
      }
    }

    for (std::size_t x = 0; x < domain.size(); ++x) {
      for (std::size_t y = 0; y < domain.size(); ++y) {
        if (x == y || union_parthood(domain[x], domain[y], eps)) continue;
        bool witnessed = false;
        for (const UnionObject& z : domain) {
          if (union_parthood(z, domain[x], eps) && !union_overlap(z, domain[y], eps)) {
            witnessed = true;
            break;
          }
        }
        if (witnessed) continue;
        // Some part of x escapes every part of y; plant a clear atom in it.
        const Subspace* escaped = nullptr;
        for (const Subspace& p : domain[x].parts()) {
          bool covered = false;
          for (const Subspace& q : domain[y].parts()) {
            if (contains(q, p, eps)) {
              covered = true;
              break;
            }
          }
          if (!covered) {
            escaped = &p;
            break;
          }
        }
        if (escaped == nullptr) throw std::logic_error("union_submodel_check: parthood broke");
        const Subspace atom = interior_atom_avoiding(*escaped, domain[y].parts(), eps, rng);
        add(UnionObject::single(atom, eps));
        changed = true;
      }
    }
  }

  const std::size_t n = domain.size();
  AxiomReport report;
  report.seed = config.seed;
  report.epsilon = eps;
  report.samples = config.samples;
  report.dim = d;
  report.particles = 0;
  report.domain_size = n;

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> ov(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      le[i][j] = union_parthood(domain[i], domain[j], eps);
      ov[i][j] = union_overlap(domain[i], domain[j], eps);
    }
  }

  AxiomResult po{kAxiomPartialOrder, true, 0, ""};
  for (std::size_t i = 0; i < n && po.holds; ++i) {
    ++po.cases;
    if (!le[i][i]) {
      po.holds = false;
      po.note = "reflexivity failed";
    }
  }
  for (std::size_t i = 0; i < n && po.holds; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++po.cases;
      if (le[i][j] && le[j][i] && !domain[i].equals(domain[j], eps)) {
        po.holds = false;
        po.note = "antisymmetry failed";
        break;
      }
    }
  }
  for (std::size_t i = 0; i < n && po.holds; ++i) {
    for (std::size_t j = 0; j < n && po.holds; ++j) {
      if (!le[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        ++po.cases;
        if (le[j][k] && !le[i][k]) {
          po.holds = false;
          po.note = "transitivity failed";
          break;
        }
      }
    }
  }
  report.axioms.push_back(std::move(po));

  AxiomResult ss{kAxiomStrongSupplementation, true, 0, ""};
  for (std::size_t x = 0; x < n && ss.holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (le[x][y]) continue;
      ++ss.cases;
      bool witnessed = false;
      for (std::size_t z = 0; z < n && !witnessed; ++z) {
        witnessed = le[z][x] && !ov[z][y];
      }
      if (!witnessed) {
        ss.holds = false;
        ss.note = "a non-part pair has no disjoint supplement in the domain";
        break;
      }
    }
  }
  report.axioms.push_back(std::move(ss));

  const auto is_atom = [](const UnionObject& obj) {
    return obj.parts().size() == 1 && obj.parts().front().rank() == 1;
  };
  AxiomResult atomicity{kAxiomAtomicity, true, 0, ""};
  for (std::size_t x = 0; x < n && atomicity.holds; ++x) {
    ++atomicity.cases;
    bool found = false;
    for (std::size_t z = 0; z < n && !found; ++z) {
      found = is_atom(domain[z]) && le[z][x];
    }
    if (!found) {
      atomicity.holds = false;
      atomicity.note = "an object has no atomic part in the domain";
    }
  }
  report.axioms.push_back(std::move(atomicity));

  AxiomResult fusion{kAxiomFusionExistence, true, 0, ""};
  for (const auto& [family, fused] : families) {
    if (!fusion.holds) break;
    // The fusion must live in the domain ...
    std::size_t f = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (domain[i].equals(fused, eps)) {
        f = i;
        break;
      }
    }
    if (f == n) {
      fusion.holds = false;
      fusion.note = "a family fusion is missing from the domain";
      break;
    }
    // ... and every domain element must overlap it iff it overlaps a member.
    for (std::size_t w = 0; w < n; ++w) {
      ++fusion.cases;
      bool member_overlap = false;
      for (const UnionObject& t : family) {
        if (union_overlap(domain[w], t, eps)) {
          member_overlap = true;
          break;
        }
      }
      if (ov[w][f] != member_overlap) {
        fusion.holds = false;
        fusion.note = "fusion overlap condition failed";
        break;
      }
    }
  }
  if (fusion.holds) {
    fusion.note = "every instantiated family is fused by its pooled parts";
  }
  report.axioms.push_back(std::move(fusion));

  return report;
}

}  // namespace fermereo
