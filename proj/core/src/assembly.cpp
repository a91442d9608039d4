#include "fermereo/assembly.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fermereo {

void RunConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("RunConfig: epsilon must be > 0");
  if (samples < 1) throw std::invalid_argument("RunConfig: samples must be >= 1");
}

Assembly::Assembly(Subspace space, AntiSymTensor state)
    : space_(std::move(space)), state_(std::move(state)) {}

Assembly Assembly::from_vectors(const std::vector<Eigen::VectorXcd>& vectors, double eps) {
  if (vectors.empty()) throw std::invalid_argument("Assembly: no vectors");
  const int dim = static_cast<int>(vectors[0].size());
  const int n = static_cast<int>(vectors.size());
  Eigen::MatrixXcd cols(dim, n);
  for (int c = 0; c < n; ++c) {
    if (static_cast<int>(vectors[c].size()) != dim) {
      throw std::invalid_argument("Assembly: vector length mismatch");
    }
    if (std::abs(vectors[c].norm() - 1.0) > std::max(eps, 1e-6)) {
      throw std::invalid_argument("Assembly: input vectors must be unit");
    }
    cols.col(c) = vectors[c];
  }
  Subspace space = Subspace::span_of(cols, eps);
  if (space.rank() != n) {
    throw std::invalid_argument(
        "Assembly: dependent input vectors (exclusion: the wedge vanishes)");
  }
  AntiSymTensor state = decomposable_state(space);
  return Assembly(std::move(space), std::move(state));
}

Assembly Assembly::from_state(const AntiSymTensor& omega, double eps) {
  const AntiSymTensor state = omega.normalized(eps);
  const Decomposability verdict = is_decomposable(state, eps);
  if (!verdict.decomposable) {
    throw GmwEntangledError(
        "Assembly: total state is GMW-entangled (not decomposable); no system-space exists");
  }
  return Assembly(verdict.support, state);
}

SystemObject make_system(const Assembly& assembly, const Subspace& space, double eps) {
  if (space.dim() != assembly.dim()) throw std::invalid_argument("make_system: dim mismatch");
  if (space.is_zero()) throw std::invalid_argument("make_system: zero subspace");
  if (!contains(assembly.space(), space, std::max(eps, 1e-7))) {
    throw std::invalid_argument("make_system: space not inside the assembly space");
  }
  return SystemObject{space, decomposable_state(space)};
}

namespace {

// Basis-subset subspaces of `frame` (spans of nonempty generator subsets).
std::vector<Subspace> basis_subset_spaces(const Subspace& frame) {
  std::vector<Subspace> out;
  const int n = frame.rank();
  for (Mask subset = 1; subset < (Mask{1} << n); ++subset) {
    Eigen::MatrixXcd cols(frame.dim(), std::popcount(subset));
    Eigen::Index c = 0;
    for (const int i : mask_indices(subset)) cols.col(c++) = frame.generators().col(i);
    out.push_back(Subspace::span_of(cols));
  }
  return out;
}

}  // namespace

ProjectorSampler make_projector_sampler(const Assembly& assembly, const RunConfig& config) {
  config.validate();
  ProjectorSampler sampler;
  sampler.probes = basis_subset_spaces(assembly.space());
  sampler.probes.push_back(Subspace::full(assembly.dim()));
  Rng rng(config.seed);
  for (int i = 0; i < config.samples; ++i) {
    const int rank = 1 + i % assembly.dim();
    sampler.probes.push_back(random_subspace(assembly.dim(), rank, rng, config.epsilon));
  }
  return sampler;
}

SystemSampler make_system_sampler(const Assembly& assembly, const RunConfig& config) {
  config.validate();
  SystemSampler sampler;
  sampler.objects = basis_subset_spaces(assembly.space());
  Rng rng(config.seed + 1);
  for (int i = 0; i < config.samples; ++i) {
    const int rank = 1 + i % assembly.particles();
    sampler.objects.push_back(
        random_subspace_within(assembly.space(), rank, rng, config.epsilon));
  }
  return sampler;
}

bool has_property(const AntiSymTensor& state, const OccupancyProjector& q, double eps) {
  if (state.dim() != q.dim() || state.degree() != q.particles()) return false;
  const AntiSymTensor image = q.apply(state);
  return (image - state).is_zero(eps);
}

bool has_property(const AntiSymTensor& state, const Subspace& base, int particles,
                  int occupancy, double eps) {
  if (state.dim() != base.dim() || state.degree() != particles) return false;
  // Vanishing window: the projector is zero unless
  // occupancy <= rank(base) <= dim - particles + occupancy.
  if (occupancy > base.rank() || base.rank() > base.dim() - particles + occupancy) {
    return false;
  }
  const AntiSymTensor image = apply_occupancy(base, particles, occupancy, state, eps);
  return (image - state).is_zero(eps);
}

bool parthood_definitional(const SystemObject& x, const SystemObject& y,
                           const Assembly& assembly, const ProjectorSampler& sampler,
                           double eps) {
  std::vector<const Subspace*> probes;
  probes.reserve(sampler.probes.size() + 2);
  for (const Subspace& p : sampler.probes) probes.push_back(&p);
  probes.push_back(&x.space);
  probes.push_back(&y.space);

  const int n = assembly.particles();
  for (const Subspace* p : probes) {
    for (int s = 1; s <= n; ++s) {
      if (!has_property(y.state, *p, s, s, eps)) continue;
      bool some_r = false;
      for (int r = 1; r <= s && !some_r; ++r) {
        some_r = has_property(x.state, *p, r, r, eps);
      }
      if (!some_r) return false;
    }
  }
  return true;
}

bool identity_by_profile(const SystemObject& x, const SystemObject& y,
                         const Assembly& assembly, const ProjectorSampler& sampler,
                         double eps) {
  std::vector<const Subspace*> probes;
  probes.reserve(sampler.probes.size() + 2);
  for (const Subspace& p : sampler.probes) probes.push_back(&p);
  probes.push_back(&x.space);
  probes.push_back(&y.space);

  const int n = assembly.particles();
  for (const Subspace* p : probes) {
    for (int s = 1; s <= n; ++s) {
      for (int r = 0; r <= s; ++r) {
        if (has_property(x.state, *p, s, r, eps) != has_property(y.state, *p, s, r, eps)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool subsystem_existence_check(const Assembly& assembly, const Subspace& p, int r,
                               double eps) {
  const int n = assembly.particles();
  if (r < 1 || r > n) throw std::invalid_argument("subsystem_existence_check: r out of [1, N]");
  if (p.dim() != assembly.dim()) {
    throw std::invalid_argument("subsystem_existence_check: dim mismatch");
  }

  // Left sides: "at least r of N constituents in P" and "exactly r".
  AntiSymTensor tail(assembly.dim(), n);
  for (int i = r; i <= n; ++i) {
    tail = tail + apply_occupancy(p, n, i, assembly.state(), eps);
  }
  const bool at_least_r = (tail - assembly.state()).is_zero(eps);
  const bool exactly_r = has_property(assembly.state(), p, n, r, eps);

  // Right sides, realized constructively: candidate subsystems with all r
  // constituents in P are exactly the rank-r subspaces of meet(P, space).
  const Subspace overlap = meet(p, assembly.space(), eps);
  bool exists = false;
  bool unique = false;
  if (overlap.rank() >= r) {
    const SystemObject x =
        make_system(assembly, Subspace::span_of(overlap.generators().leftCols(r), eps), eps);
    exists = has_property(x.state, p, r, r, eps);
    if (overlap.rank() == r) {
      unique = exists;
    } else if (exists) {
      // Two distinct witnesses refute uniqueness.
      const SystemObject other = make_system(
          assembly, Subspace::span_of(overlap.generators().middleCols(1, r), eps), eps);
      const bool other_ok = has_property(other.state, p, r, r, eps) &&
                            !other.space.equals(x.space, eps);
      unique = !other_ok;
    }
  }

  return (at_least_r == exists) && (exactly_r == unique);
}

std::vector<SystemObject> distinct_atom_family(const Assembly& assembly, int count,
                                               double eps) {
  if (assembly.particles() < 2) {
    throw std::invalid_argument("distinct_atom_family: needs N >= 2");
  }
  if (count < 1) throw std::invalid_argument("distinct_atom_family: count must be >= 1");
  const Eigen::VectorXcd a = assembly.space().generators().col(0);
  const Eigen::VectorXcd b = assembly.space().generators().col(1);
  std::vector<SystemObject> out;
  out.reserve(static_cast<std::size_t>(count));
  // Angles in [0, pi) hit pairwise non-proportional real mixtures.
  const double pi = std::acos(-1.0);
  for (int k = 0; k < count; ++k) {
    const double theta = pi * static_cast<double>(k) / static_cast<double>(count);
    const Eigen::VectorXcd v = std::cos(theta) * a + std::sin(theta) * b;
    out.push_back(make_system(assembly, Subspace::line(v, eps), eps));
  }
  return out;
}

}  // namespace fermereo
