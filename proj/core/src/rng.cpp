#include "fermereo/rng.hpp"

#include <stdexcept>

namespace fermereo {

Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  const double im = gauss(rng);
  return Complex{re, im};
}

Eigen::VectorXcd gaussian_vector(int dim, Rng& rng) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = gaussian_complex(rng);
  return v;
}

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = gaussian_complex(rng);
  }
  return m;
}

Eigen::VectorXcd random_unit_vector(int dim, Rng& rng) {
  Eigen::VectorXcd v = gaussian_vector(dim, rng);
  const double n = v.norm();
  if (n == 0.0) return random_unit_vector(dim, rng);
  return v / n;
}

Subspace random_subspace(int dim, int rank, Rng& rng, double eps) {
  if (rank < 0 || rank > dim) throw std::invalid_argument("random_subspace: bad rank");
  if (rank == 0) return Subspace::zero(dim);
  Subspace s = Subspace::span_of(gaussian_matrix(dim, rank, rng), eps);
  // Gaussian columns are almost surely independent; retry on the null event.
  while (s.rank() != rank) s = Subspace::span_of(gaussian_matrix(dim, rank, rng), eps);
  return s;
}

Subspace random_subspace_within(const Subspace& ambient, int rank, Rng& rng, double eps) {
  if (rank < 0 || rank > ambient.rank()) {
    throw std::invalid_argument("random_subspace_within: bad rank");
  }
  if (rank == 0) return Subspace::zero(ambient.dim());
  Eigen::MatrixXcd mix = ambient.generators() * gaussian_matrix(ambient.rank(), rank, rng);
  Subspace s = Subspace::span_of(mix, eps);
  while (s.rank() != rank) {
    mix = ambient.generators() * gaussian_matrix(ambient.rank(), rank, rng);
    s = Subspace::span_of(mix, eps);
  }
  return s;
}

AntiSymTensor random_antisym_tensor(int dim, int degree, Rng& rng) {
  AntiSymTensor t(dim, degree);
  for (const Mask mask : combinations(dim, degree)) {
    t.set_coeff(mask, gaussian_complex(rng));
  }
  return t.normalized();
}

AntiSymTensor random_decomposable_state(int dim, int degree, Rng& rng, double eps) {
  const Subspace s = random_subspace(dim, degree, rng, eps);
  return decomposable_state(s);
}

}  // namespace fermereo
