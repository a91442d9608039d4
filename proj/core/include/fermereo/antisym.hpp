#pragma once

#include <complex>
#include <initializer_list>
#include <map>

#include "fermereo/combinatorics.hpp"

namespace fermereo {

using Complex = std::complex<double>;

// Default comparison tolerance used across the library.
inline constexpr double kDefaultEps = 1e-9;

// Degree-r element of the exterior algebra over a d-dimensional
// one-particle space, stored as sparse coordinates on the combination
// basis e_{i1 < ... < ir}. Absent keys are zero coefficients. Construct,
// fill via set_coeff/add_coeff, then treat as immutable.
class AntiSymTensor {
 public:
  AntiSymTensor(int dim, int degree);

  // Unit basis element e_{i1} ^ ... ^ e_{ir}; indices must strictly ascend.
  static AntiSymTensor basis_element(int dim, std::initializer_list<int> indices);
  static AntiSymTensor basis_element(int dim, const std::vector<int>& indices);
  static AntiSymTensor basis_element(int dim, Mask mask);

  int dim() const { return dim_; }
  int degree() const { return degree_; }

  const std::map<Mask, Complex>& coeffs() const { return coeffs_; }
  Complex coeff(Mask mask) const;

  // Both validate the key: popcount == degree, all bits below dim, value finite.
  void set_coeff(Mask mask, Complex value);
  void add_coeff(Mask mask, Complex value);

  double norm() const;
  bool is_zero(double eps = kDefaultEps) const;
  // Throws std::domain_error on (numerically) zero tensors.
  AntiSymTensor normalized(double eps = kDefaultEps) const;

  // Drops coefficients with magnitude <= threshold.
  AntiSymTensor pruned(double threshold) const;

  // Max coefficient-wise distance; shapes must agree.
  bool approx_equal(const AntiSymTensor& other, double eps = kDefaultEps) const;

  AntiSymTensor operator-() const;

  friend AntiSymTensor operator+(const AntiSymTensor& a, const AntiSymTensor& b);
  friend AntiSymTensor operator-(const AntiSymTensor& a, const AntiSymTensor& b);
  friend AntiSymTensor operator*(Complex s, const AntiSymTensor& a);
  friend AntiSymTensor operator*(const AntiSymTensor& a, Complex s);

 private:
  void validate_key(Mask mask, Complex value) const;

  int dim_;
  int degree_;
  std::map<Mask, Complex> coeffs_;
};

// Exterior product. Degrees add; overlapping index sets vanish. Requires
// equal dim. A degree sum above dim yields the zero tensor of that degree.
AntiSymTensor wedge(const AntiSymTensor& a, const AntiSymTensor& b);

// Hermitian inner product on combination coordinates, conjugate-linear in
// the first argument. Requires equal dim and degree.
Complex inner(const AntiSymTensor& a, const AntiSymTensor& b);

// True iff the unit tensors a and b agree up to a global phase:
// |<a, b>| = 1 within eps. Throws on non-unit input.
bool phase_equal(const AntiSymTensor& a, const AntiSymTensor& b, double eps = kDefaultEps);

}  // namespace fermereo
