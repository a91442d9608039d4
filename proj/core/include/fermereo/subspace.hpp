#pragma once

#include <Eigen/Dense>

#include "fermereo/antisym.hpp"

namespace fermereo {

// Closed subspace of a d-dimensional complex space, held as an orthonormal
// generator matrix (d x rank) plus its cached orthogonal projector.
// Equality is projector equality; generator bases are one choice of many.
class Subspace {
 public:
  static Subspace zero(int dim);
  static Subspace full(int dim);

  // Column space of `vectors` (d x k, any k >= 0); near-dependent columns
  // are dropped using a rank cut relative to the largest pivot.
  static Subspace span_of(const Eigen::MatrixXcd& vectors, double eps = kDefaultEps);

  // Line through a single nonzero vector.
  static Subspace line(const Eigen::VectorXcd& v, double eps = kDefaultEps);

  // Span of the coordinate axes named by `axes`.
  static Subspace coordinate(int dim, Mask axes);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(gens_.cols()); }
  bool is_zero() const { return gens_.cols() == 0; }

  const Eigen::MatrixXcd& generators() const { return gens_; }
  const Eigen::MatrixXcd& projector() const { return proj_; }

  // Max entry-wise projector distance below eps.
  bool equals(const Subspace& other, double eps = kDefaultEps) const;

  // True iff the projector is a 0/1 diagonal within eps.
  bool is_coordinate(double eps = kDefaultEps) const;
  // Axes of a coordinate subspace; throws std::domain_error otherwise.
  Mask coordinate_axes(double eps = kDefaultEps) const;

 private:
  Subspace(int dim, Eigen::MatrixXcd gens);

  int dim_;
  Eigen::MatrixXcd gens_;
  Eigen::MatrixXcd proj_;
};

// Unit wedge of any orthonormal basis of `s`; well-defined up to the unit
// phase given by the determinant of a basis change. Throws on the zero
// subspace.
AntiSymTensor decomposable_state(const Subspace& s);

struct Decomposability {
  bool decomposable;
  // One-body support: span of all contractions of the state down to
  // vectors. Equals the degree iff the state is decomposable, in which
  // case the support is the system-space of the state.
  Subspace support;
};

// Support-rank test for decomposability (the GMW-entanglement criterion:
// a fermionic state is non-entangled iff it is a single Slater
// determinant). Throws std::domain_error on zero input and
// std::invalid_argument on degree 0.
Decomposability is_decomposable(const AntiSymTensor& a, double eps = kDefaultEps);

}  // namespace fermereo
