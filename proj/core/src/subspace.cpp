#include "fermereo/subspace.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fermereo {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxModes) throw std::invalid_argument("Subspace: dim out of range");
}

// Rotates each column so its largest-magnitude entry is real positive;
// keeps generator choices reproducible across equivalent inputs.
void canonicalize_phases(Eigen::MatrixXcd& gens) {
  for (Eigen::Index c = 0; c < gens.cols(); ++c) {
    Eigen::Index best = 0;
    double best_mag = -1.0;
    for (Eigen::Index r = 0; r < gens.rows(); ++r) {
      const double mag = std::abs(gens(r, c));
      if (mag > best_mag + 1e-12) {
        best_mag = mag;
        best = r;
      }
    }
    const Complex pivot = gens(best, c);
    if (std::abs(pivot) > 0.0) gens.col(c) *= std::conj(pivot) / std::abs(pivot);
  }
}

}  // namespace

Subspace::Subspace(int dim, Eigen::MatrixXcd gens) : dim_(dim), gens_(std::move(gens)) {
  proj_ = gens_ * gens_.adjoint();
  if (gens_.cols() == 0) proj_ = Eigen::MatrixXcd::Zero(dim_, dim_);
}

Subspace Subspace::zero(int dim) {
  check_dim(dim);
  return Subspace(dim, Eigen::MatrixXcd(dim, 0));
}

Subspace Subspace::full(int dim) {
  check_dim(dim);
  return Subspace(dim, Eigen::MatrixXcd::Identity(dim, dim));
}

Subspace Subspace::span_of(const Eigen::MatrixXcd& vectors, double eps) {
  const int dim = static_cast<int>(vectors.rows());
  check_dim(dim);
  if (!vectors.allFinite()) throw std::invalid_argument("Subspace: non-finite generator");
  if (vectors.cols() == 0) return zero(dim);
  // The QR rank threshold is relative to the largest pivot, so a matrix of
  // pure rounding noise would otherwise count as full rank.
  if (vectors.cwiseAbs().maxCoeff() <= eps) return zero(dim);

  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(vectors);
  qr.setThreshold(eps);
  const Eigen::Index rank = qr.rank();
  if (rank == 0) return zero(dim);

  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(dim, rank);
  canonicalize_phases(q);
  return Subspace(dim, std::move(q));
}

Subspace Subspace::line(const Eigen::VectorXcd& v, double eps) {
  Subspace s = span_of(v, eps);
  if (s.rank() != 1) throw std::invalid_argument("Subspace::line: zero vector");
  return s;
}

Subspace Subspace::coordinate(int dim, Mask axes) {
  check_dim(dim);
  if ((axes >> dim) != 0) throw std::invalid_argument("Subspace::coordinate: axis out of range");
  const std::vector<int> indices = mask_indices(axes);
  Eigen::MatrixXcd gens = Eigen::MatrixXcd::Zero(dim, static_cast<Eigen::Index>(indices.size()));
  for (std::size_t c = 0; c < indices.size(); ++c) {
    gens(indices[c], static_cast<Eigen::Index>(c)) = Complex{1.0, 0.0};
  }
  return Subspace(dim, std::move(gens));
}

bool Subspace::equals(const Subspace& other, double eps) const {
  if (dim_ != other.dim_) throw std::invalid_argument("Subspace::equals: dim mismatch");
  return (proj_ - other.proj_).cwiseAbs().maxCoeff() <= eps;
}

bool Subspace::is_coordinate(double eps) const {
  for (Eigen::Index r = 0; r < proj_.rows(); ++r) {
    for (Eigen::Index c = 0; c < proj_.cols(); ++c) {
      const Complex v = proj_(r, c);
      if (r == c) {
        if (std::abs(v) > eps && std::abs(v - Complex{1.0, 0.0}) > eps) return false;
      } else if (std::abs(v) > eps) {
        return false;
      }
    }
  }
  return true;
}

Mask Subspace::coordinate_axes(double eps) const {
  if (!is_coordinate(eps)) throw std::domain_error("Subspace: not a coordinate subspace");
  Mask axes = 0;
  for (Eigen::Index r = 0; r < proj_.rows(); ++r) {
    if (std::abs(proj_(r, r) - Complex{1.0, 0.0}) <= eps) axes |= Mask{1} << r;
  }
  return axes;
}

AntiSymTensor decomposable_state(const Subspace& s) {
  if (s.is_zero()) throw std::domain_error("decomposable_state: zero subspace");
  const int d = s.dim();
  AntiSymTensor acc(d, 0);
  acc.set_coeff(0, Complex{1.0, 0.0});
  for (Eigen::Index c = 0; c < s.generators().cols(); ++c) {
    AntiSymTensor factor(d, 1);
    for (int i = 0; i < d; ++i) {
      const Complex v = s.generators()(i, c);
      if (v != Complex{0.0, 0.0}) factor.set_coeff(Mask{1} << i, v);
    }
    acc = wedge(acc, factor);
  }
  return acc;
}

Decomposability is_decomposable(const AntiSymTensor& a, double eps) {
  if (a.degree() < 1) throw std::invalid_argument("is_decomposable: degree must be >= 1");
  if (a.is_zero(eps)) throw std::domain_error("is_decomposable: zero tensor");
  const int d = a.dim();
  const int r = a.degree();

  // Contraction of `a` against every (r-1)-combination: column L holds
  // sum_{i not in L} sgn(L, i) a_{L + i} e_i with sgn the position parity
  // of i inside the sorted union. Their span is the one-body support.
  const std::vector<Mask> lower = combinations(d, r - 1);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, static_cast<Eigen::Index>(lower.size()));
  for (std::size_t c = 0; c < lower.size(); ++c) {
    const Mask l = lower[c];
    for (int i = 0; i < d; ++i) {
      const Mask bit = Mask{1} << i;
      if ((l & bit) != 0) continue;
      const Complex coeff = a.coeff(l | bit);
      if (coeff == Complex{0.0, 0.0}) continue;
      const int below = std::popcount(l & (bit - 1));
      const double sign = (below % 2 == 0) ? 1.0 : -1.0;
      m(i, static_cast<Eigen::Index>(c)) = sign * coeff;
    }
  }

  // Rank cut relative to the largest singular value.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  const Eigen::VectorXd sv = svd.singularValues();
  const double top = sv.size() > 0 ? sv(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > eps * top) ++rank;
  }
  Subspace support = rank == 0
                         ? Subspace::zero(d)
                         : Subspace::span_of(svd.matrixU().leftCols(rank), eps);

  bool decomposable = (static_cast<int>(rank) == r);
  if (decomposable) {
    // Cross-check: the unit wedge over the support must match `a` up to phase.
    const AntiSymTensor rebuilt = decomposable_state(support);
    decomposable = phase_equal(a.normalized(eps), rebuilt, std::max(eps, 1e-7));
  }
  return Decomposability{decomposable, std::move(support)};
}

}  // namespace fermereo
