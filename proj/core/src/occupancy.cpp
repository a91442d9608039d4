#include "fermereo/occupancy.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "fermereo/product_tensor.hpp"

namespace fermereo {

namespace {

void check_shape(int dim, int particles, int occupancy) {
  if (particles < 1 || particles > dim) {
    throw std::invalid_argument("occupancy: particles out of [1, dim]");
  }
  if (occupancy < 0 || occupancy > particles) {
    throw std::invalid_argument("occupancy: occupancy out of [0, particles]");
  }
}

// Applies the d x d matrix `m` to one slot of a d^s coordinate vector.
Eigen::VectorXcd slot_apply(const Eigen::VectorXcd& in, int d, int s, int slot,
                            const Eigen::MatrixXcd& m) {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(in.size());
  std::size_t post = 1;
  for (int j = slot + 1; j < s; ++j) post *= static_cast<std::size_t>(d);
  std::size_t pre = 1;
  for (int j = 0; j < slot; ++j) pre *= static_cast<std::size_t>(d);

  const std::size_t dd = static_cast<std::size_t>(d);
  for (std::size_t p = 0; p < pre; ++p) {
    for (std::size_t a = 0; a < dd; ++a) {
      for (std::size_t b = 0; b < dd; ++b) {
        const Complex coeff = m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        if (coeff == Complex{0.0, 0.0}) continue;
        const std::size_t out_base = (p * dd + a) * post;
        const std::size_t in_base = (p * dd + b) * post;
        for (std::size_t q = 0; q < post; ++q) {
          out(static_cast<Eigen::Index>(out_base + q)) +=
              coeff * in(static_cast<Eigen::Index>(in_base + q));
        }
      }
    }
  }
  return out;
}

// Compression isometry per (dim, particles): columns are the full-tensor
// forms of the combination basis, in combinations(dim, particles) order.
// Value-deterministic, so caching cannot change any output.
std::shared_ptr<const Eigen::MatrixXcd> compression_basis(int d, int s) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Eigen::MatrixXcd>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  const auto key = std::make_pair(d, s);
  if (const auto it = cache.find(key); it != cache.end()) return it->second;

  const std::vector<Mask> basis = combinations(d, s);
  std::size_t full = 1;
  for (int j = 0; j < s; ++j) {
    full *= static_cast<std::size_t>(d);
    if (full > kProductSizeCap) {
      throw std::invalid_argument("occupancy: dim^particles exceeds size cap");
    }
  }
  auto w = std::make_shared<Eigen::MatrixXcd>(static_cast<Eigen::Index>(full),
                                              static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) {
    w->col(static_cast<Eigen::Index>(c)) =
        embed_full(AntiSymTensor::basis_element(d, basis[c])).data();
  }
  cache.emplace(key, w);
  return w;
}

// Sum over occupancy-subsets of slots of (P on the subset, P-perp off it),
// applied to a full coordinate vector.
Eigen::VectorXcd occupancy_sum_apply(const Eigen::VectorXcd& in, int d, int s, int r,
                                     const Eigen::MatrixXcd& p) {
  const Eigen::MatrixXcd q = Eigen::MatrixXcd::Identity(d, d) - p;
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(in.size());
  for (const Mask slots : combinations(s, r)) {
    Eigen::VectorXcd w = in;
    for (int j = 0; j < s; ++j) {
      const bool inside = ((slots >> j) & 1) != 0;
      w = slot_apply(w, d, s, j, inside ? p : q);
    }
    acc += w;
  }
  return acc;
}

}  // namespace

OccupancyProjector::OccupancyProjector(Subspace base, int particles, int occupancy,
                                       double eps)
    : base_(std::move(base)), particles_(particles), occupancy_(occupancy) {
  const int d = base_.dim();
  check_shape(d, particles_, occupancy_);
  const std::uint64_t size = binomial(d, particles_);
  if (size > static_cast<std::uint64_t>(kMaxMatrixDim)) {
    throw std::invalid_argument("OccupancyProjector: combination basis exceeds matrix cap");
  }
  const std::vector<Mask> basis = combinations(d, particles_);
  const Eigen::Index n = static_cast<Eigen::Index>(basis.size());

  if (base_.is_coordinate(eps)) {
    // Coordinate bases act diagonally: a combination is kept iff exactly
    // `occupancy` of its modes lie on the base axes.
    const Mask axes = base_.coordinate_axes(eps);
    matrix_ = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::popcount(basis[static_cast<std::size_t>(i)] & axes) == occupancy_) {
        matrix_(i, i) = Complex{1.0, 0.0};
      }
    }
    return;
  }

  const auto w = compression_basis(d, particles_);
  matrix_.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::VectorXcd image =
        occupancy_sum_apply(w->col(c), d, particles_, occupancy_, base_.projector());
    matrix_.col(c) = w->adjoint() * image;
  }
}

AntiSymTensor OccupancyProjector::apply(const AntiSymTensor& v) const {
  if (v.dim() != dim() || v.degree() != particles_) {
    throw std::invalid_argument("OccupancyProjector::apply: shape mismatch");
  }
  const std::vector<Mask> basis = combinations(dim(), particles_);
  Eigen::VectorXcd coords = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [mask, c] : v.coeffs()) {
    coords(static_cast<Eigen::Index>(combination_rank(mask))) = c;
  }
  const Eigen::VectorXcd image = matrix_ * coords;
  AntiSymTensor out(dim(), particles_);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Complex value = image(static_cast<Eigen::Index>(i));
    if (value != Complex{0.0, 0.0}) out.set_coeff(basis[i], value);
  }
  return out;
}

AntiSymTensor apply_occupancy(const Subspace& base, int particles, int occupancy,
                              const AntiSymTensor& v, double eps) {
  const int d = base.dim();
  check_shape(d, particles, occupancy);
  if (v.dim() != d || v.degree() != particles) {
    throw std::invalid_argument("apply_occupancy: shape mismatch");
  }

  if (base.is_coordinate(eps)) {
    const Mask axes = base.coordinate_axes(eps);
    AntiSymTensor out(d, particles);
    for (const auto& [mask, c] : v.coeffs()) {
      if (std::popcount(mask & axes) == occupancy) out.set_coeff(mask, c);
    }
    return out;
  }

  const ProductTensor full = embed_full(v);
  const Eigen::VectorXcd image =
      occupancy_sum_apply(full.data(), d, particles, occupancy, base.projector());
  ProductTensor result(d, particles);
  result.data() = image;
  return antisymmetrize(result);
}

bool projector_leq(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, double eps) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("projector_leq: shape mismatch");
  }
  const auto is_projector = [eps](const Eigen::MatrixXcd& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps &&
           (m * m - m).cwiseAbs().maxCoeff() <= eps;
  };
  if (!is_projector(a) || !is_projector(b)) {
    throw std::invalid_argument("projector_leq: input is not a projector");
  }
  return (a * b - a).cwiseAbs().maxCoeff() <= eps &&
         (b * a - a).cwiseAbs().maxCoeff() <= eps;
}

std::optional<int> occupancy_of_state(const AntiSymTensor& state, const Subspace& base,
                                      double eps) {
  if (std::abs(state.norm() - 1.0) > eps) {
    throw std::invalid_argument("occupancy_of_state: state must be unit");
  }
  const int s = state.degree();
  for (int r = 0; r <= s; ++r) {
    const AntiSymTensor image = apply_occupancy(base, s, r, state, eps);
    if ((image - state).is_zero(std::max(eps, 1e-9))) return r;
  }
  return std::nullopt;
}

}  // namespace fermereo
