#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "fermereo/antisym.hpp"

namespace fermereo {

// Guard against accidental exponential blowups: dim^degree entries.
inline constexpr std::size_t kProductSizeCap = 1'000'000;

// Dense element of the degree-fold tensor power of a dim-dimensional
// space. Flat index layout puts the first slot most significant:
// flat(i1,...,ir) = ((i1*d + i2)*d + ...)*d + ir.
class ProductTensor {
 public:
  // Zero tensor; throws std::invalid_argument when dim^degree > size_cap.
  ProductTensor(int dim, int degree, std::size_t size_cap = kProductSizeCap);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  std::size_t size() const { return static_cast<std::size_t>(data_.size()); }

  const Eigen::VectorXcd& data() const { return data_; }
  Eigen::VectorXcd& data() { return data_; }

  std::size_t flat_index(const std::vector<int>& multi) const;
  Complex at(const std::vector<int>& multi) const;
  void set(const std::vector<int>& multi, Complex value);

  double norm() const { return data_.norm(); }

 private:
  int dim_;
  int degree_;
  Eigen::VectorXcd data_;
};

// Slot permutation: out[m_1,...,m_r] = in[m_{perm[1]},...,m_{perm[r]}],
// i.e. the vector originally in slot j moves to slot perm^{-1}(j).
ProductTensor apply_permutation(const ProductTensor& t, const std::vector<int>& perm);

// Isometric coordinate bridge: each combination basis element maps to the
// corresponding unit Slater vector (1/sqrt(r!)) sum_pi sgn(pi) e_{K(pi)}.
ProductTensor embed_full(const AntiSymTensor& a, std::size_t size_cap = kProductSizeCap);

// Adjoint of embed_full: combination coordinate at K is
// (1/sqrt(r!)) sum_pi sgn(pi) t[K o pi]. antisymmetrize(embed_full(a)) == a
// exactly; embed_full(antisymmetrize(t)) is the orthogonal projection of t
// onto the antisymmetric sector.
AntiSymTensor antisymmetrize(const ProductTensor& t);

// Hermitian inner product, conjugate-linear in the first argument.
Complex inner(const ProductTensor& a, const ProductTensor& b);

}  // namespace fermereo
