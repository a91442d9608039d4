#pragma once

#include <random>

#include "fermereo/subspace.hpp"

namespace fermereo {

// All sampling in the library flows through one seeded engine so runs are
// reproducible for a fixed seed.
using Rng = std::mt19937_64;

Complex gaussian_complex(Rng& rng);

Eigen::VectorXcd gaussian_vector(int dim, Rng& rng);

Eigen::MatrixXcd gaussian_matrix(int rows, int cols, Rng& rng);

Eigen::VectorXcd random_unit_vector(int dim, Rng& rng);

// Haar-like random subspace of the given rank (span of Gaussian columns).
Subspace random_subspace(int dim, int rank, Rng& rng, double eps = kDefaultEps);

// Random subspace of the given rank inside `ambient`.
Subspace random_subspace_within(const Subspace& ambient, int rank, Rng& rng,
                                double eps = kDefaultEps);

// Unit tensor with Gaussian coefficients on every combination.
AntiSymTensor random_antisym_tensor(int dim, int degree, Rng& rng);

// Unit wedge of `degree` independent Gaussian vectors.
AntiSymTensor random_decomposable_state(int dim, int degree, Rng& rng,
                                        double eps = kDefaultEps);

}  // namespace fermereo
