#include "fermereo/lattice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fermereo {

namespace {

void check_same_dim(const Subspace& x, const Subspace& y, const char* where) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument(std::string(where) + ": dim mismatch");
  }
}

}  // namespace

Subspace meet(const Subspace& x, const Subspace& y, double eps) {
  check_same_dim(x, y, "meet");
  if (x.is_zero() || y.is_zero()) return Subspace::zero(x.dim());

  // P_x + P_y is Hermitian with spectrum in [0, 2]; the eigenvalue-2
  // eigenspace is exactly the intersection.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(x.projector() + y.projector());
  if (solver.info() != Eigen::Success) throw std::runtime_error("meet: eigensolver failed");
  const Eigen::VectorXd values = solver.eigenvalues();

  Eigen::Index count = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) >= 2.0 - eps) ++count;
  }
  if (count == 0) return Subspace::zero(x.dim());
  // Eigenvalues come back ascending; the top `count` carry the intersection.
  return Subspace::span_of(solver.eigenvectors().rightCols(count), eps);
}

Subspace join(const Subspace& x, const Subspace& y, double eps) {
  check_same_dim(x, y, "join");
  Eigen::MatrixXcd stacked(x.dim(), x.generators().cols() + y.generators().cols());
  stacked << x.generators(), y.generators();
  return Subspace::span_of(stacked, eps);
}

bool contains(const Subspace& outer, const Subspace& inner, double eps) {
  check_same_dim(outer, inner, "contains");
  if (inner.is_zero()) return true;
  return (outer.projector() * inner.projector() - inner.projector())
             .cwiseAbs()
             .maxCoeff() <= eps;
}

Subspace ortho_complement_in(const Subspace& x, const Subspace& ambient, double eps) {
  check_same_dim(x, ambient, "ortho_complement_in");
  if (!contains(ambient, x, eps)) {
    throw std::invalid_argument("ortho_complement_in: x not inside ambient");
  }
  // P_ambient - P_x is the projector onto the relative complement.
  return Subspace::span_of(ambient.projector() - x.projector(), eps);
}

Subspace supplement_witness(const Subspace& x, const Subspace& y, double eps) {
  check_same_dim(x, y, "supplement_witness");
  if (contains(y, x, eps)) {
    throw std::invalid_argument("supplement_witness: x is part of y");
  }
  const Subspace overlap = meet(x, y, eps);
  return ortho_complement_in(overlap, x, eps);
}

Subspace skew_atom_witness(const Subspace& x, const Subspace& y, double eps) {
  check_same_dim(x, y, "skew_atom_witness");
  if (x.rank() != 1 || y.rank() != 1) {
    throw std::invalid_argument("skew_atom_witness: inputs must be lines");
  }
  if (x.equals(y, eps)) {
    throw std::invalid_argument("skew_atom_witness: lines must be distinct");
  }
  const Eigen::VectorXcd u = x.generators().col(0);
  const Eigen::VectorXcd v = y.generators().col(0);
  // Align phases so the overlap is non-negative; the sum then has squared
  // norm 2 + 2|<u,v>| >= 2 and is never proportional to u or v alone.
  const Complex overlap = u.dot(v);
  const Complex phase =
      std::abs(overlap) > 0.0 ? std::conj(overlap) / std::abs(overlap) : Complex{1.0, 0.0};
  Eigen::VectorXcd w = u + phase * v;
  w.normalize();
  return Subspace::line(w, eps);
}

std::optional<Subspace> fusion_of_set(std::span<const Subspace> items, double eps) {
  if (items.empty()) throw std::invalid_argument("fusion_of_set: empty set");
  const int dim = items[0].dim();
  std::size_t best = 0;
  for (std::size_t i = 1; i < items.size(); ++i) {
    if (items[i].dim() != dim) throw std::invalid_argument("fusion_of_set: dim mismatch");
    if (items[i].rank() > items[best].rank()) best = i;
  }
  // A fusion must be the maximum element of the set: it has to contain the
  // span of all members, yet each of its atoms has to meet some member, and
  // over the complex field no subspace is a finite union of proper
  // subspaces. Hence either the max-rank member contains everything or no
  // fusion exists.
  for (const Subspace& item : items) {
    if (!contains(items[best], item, eps)) return std::nullopt;
  }
  return items[best];
}

}  // namespace fermereo
