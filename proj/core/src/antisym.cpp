#include "fermereo/antisym.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fermereo {

namespace {

void check_shape(int dim, int degree) {
  if (dim < 0 || dim > kMaxModes) throw std::invalid_argument("AntiSymTensor: dim out of range");
  if (degree < 0 || degree > kMaxModes) {
    throw std::invalid_argument("AntiSymTensor: degree out of range");
  }
}

}  // namespace

AntiSymTensor::AntiSymTensor(int dim, int degree) : dim_(dim), degree_(degree) {
  check_shape(dim, degree);
}

AntiSymTensor AntiSymTensor::basis_element(int dim, std::initializer_list<int> indices) {
  return basis_element(dim, std::vector<int>(indices));
}

AntiSymTensor AntiSymTensor::basis_element(int dim, const std::vector<int>& indices) {
  return basis_element(dim, mask_from_indices(indices, dim));
}

AntiSymTensor AntiSymTensor::basis_element(int dim, Mask mask) {
  AntiSymTensor t(dim, std::popcount(mask));
  t.set_coeff(mask, Complex{1.0, 0.0});
  return t;
}

Complex AntiSymTensor::coeff(Mask mask) const {
  const auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? Complex{0.0, 0.0} : it->second;
}

void AntiSymTensor::validate_key(Mask mask, Complex value) const {
  if (std::popcount(mask) != degree_) {
    throw std::invalid_argument("AntiSymTensor: key size does not match degree");
  }
  if ((mask >> dim_) != 0) {
    throw std::invalid_argument("AntiSymTensor: key index outside [0, dim-1]");
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument("AntiSymTensor: non-finite coefficient");
  }
}

void AntiSymTensor::set_coeff(Mask mask, Complex value) {
  validate_key(mask, value);
  if (value == Complex{0.0, 0.0}) {
    coeffs_.erase(mask);
  } else {
    coeffs_[mask] = value;
  }
}

void AntiSymTensor::add_coeff(Mask mask, Complex value) {
  validate_key(mask, value);
  const auto it = coeffs_.find(mask);
  const Complex sum = (it == coeffs_.end() ? value : it->second + value);
  if (sum == Complex{0.0, 0.0}) {
    if (it != coeffs_.end()) coeffs_.erase(it);
  } else {
    coeffs_[mask] = sum;
  }
}

double AntiSymTensor::norm() const {
  double sq = 0.0;
  for (const auto& [mask, c] : coeffs_) sq += std::norm(c);
  return std::sqrt(sq);
}

bool AntiSymTensor::is_zero(double eps) const { return norm() <= eps; }

AntiSymTensor AntiSymTensor::normalized(double eps) const {
  const double n = norm();
  if (n <= eps) throw std::domain_error("AntiSymTensor::normalized: zero tensor");
  return (Complex{1.0 / n, 0.0}) * (*this);
}

AntiSymTensor AntiSymTensor::pruned(double threshold) const {
  AntiSymTensor out(dim_, degree_);
  for (const auto& [mask, c] : coeffs_) {
    if (std::abs(c) > threshold) out.coeffs_[mask] = c;
  }
  return out;
}

bool AntiSymTensor::approx_equal(const AntiSymTensor& other, double eps) const {
  if (dim_ != other.dim_ || degree_ != other.degree_) {
    throw std::invalid_argument("AntiSymTensor::approx_equal: shape mismatch");
  }
  for (const auto& [mask, c] : coeffs_) {
    if (std::abs(c - other.coeff(mask)) > eps) return false;
  }
  for (const auto& [mask, c] : other.coeffs_) {
    if (std::abs(c - coeff(mask)) > eps) return false;
  }
  return true;
}

AntiSymTensor AntiSymTensor::operator-() const { return Complex{-1.0, 0.0} * (*this); }

AntiSymTensor operator+(const AntiSymTensor& a, const AntiSymTensor& b) {
  if (a.dim_ != b.dim_ || a.degree_ != b.degree_) {
    throw std::invalid_argument("AntiSymTensor: shape mismatch in +");
  }
  AntiSymTensor out = a;
  for (const auto& [mask, c] : b.coeffs_) out.add_coeff(mask, c);
  return out;
}

AntiSymTensor operator-(const AntiSymTensor& a, const AntiSymTensor& b) {
  return a + (-b);
}

AntiSymTensor operator*(Complex s, const AntiSymTensor& a) {
  AntiSymTensor out(a.dim_, a.degree_);
  if (s == Complex{0.0, 0.0}) return out;
  for (const auto& [mask, c] : a.coeffs_) out.coeffs_[mask] = s * c;
  return out;
}

AntiSymTensor operator*(const AntiSymTensor& a, Complex s) { return s * a; }

AntiSymTensor wedge(const AntiSymTensor& a, const AntiSymTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dim mismatch");
  AntiSymTensor out(a.dim(), a.degree() + b.degree());
  for (const auto& [ka, ca] : a.coeffs()) {
    for (const auto& [kb, cb] : b.coeffs()) {
      if ((ka & kb) != 0) continue;
      const double sign = static_cast<double>(merge_sign(ka, kb));
      out.add_coeff(ka | kb, sign * ca * cb);
    }
  }
  return out;
}

Complex inner(const AntiSymTensor& a, const AntiSymTensor& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw std::invalid_argument("inner: shape mismatch");
  }
  Complex acc{0.0, 0.0};
  for (const auto& [mask, ca] : a.coeffs()) {
    const Complex cb = b.coeff(mask);
    if (cb != Complex{0.0, 0.0}) acc += std::conj(ca) * cb;
  }
  return acc;
}

bool phase_equal(const AntiSymTensor& a, const AntiSymTensor& b, double eps) {
  if (std::abs(a.norm() - 1.0) > eps || std::abs(b.norm() - 1.0) > eps) {
    throw std::invalid_argument("phase_equal: inputs must be unit tensors");
  }
  return std::abs(std::abs(inner(a, b)) - 1.0) <= eps;
}

}  // namespace fermereo
