#include "fermereo/product_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace fermereo {

namespace {

std::size_t checked_size(int dim, int degree, std::size_t cap) {
  if (dim < 0 || degree < 0) throw std::invalid_argument("ProductTensor: negative shape");
  std::size_t size = 1;
  for (int i = 0; i < degree; ++i) {
    if (dim == 0) return 0;
    if (size > cap / static_cast<std::size_t>(dim)) {
      throw std::invalid_argument("ProductTensor: dim^degree exceeds size cap");
    }
    size *= static_cast<std::size_t>(dim);
  }
  if (size > cap) throw std::invalid_argument("ProductTensor: dim^degree exceeds size cap");
  return size;
}

// Enumerates permutations of 0..r-1 with their signs.
void for_each_permutation(int r, const std::function<void(const std::vector<int>&, int)>& fn) {
  std::vector<int> perm(static_cast<std::size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm, permutation_parity(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

ProductTensor::ProductTensor(int dim, int degree, std::size_t size_cap)
    : dim_(dim), degree_(degree) {
  const std::size_t size = checked_size(dim, degree, size_cap);
  data_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size));
}

std::size_t ProductTensor::flat_index(const std::vector<int>& multi) const {
  if (static_cast<int>(multi.size()) != degree_) {
    throw std::invalid_argument("ProductTensor: multi-index length mismatch");
  }
  std::size_t flat = 0;
  for (const int i : multi) {
    if (i < 0 || i >= dim_) throw std::invalid_argument("ProductTensor: index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return flat;
}

Complex ProductTensor::at(const std::vector<int>& multi) const {
  return data_(static_cast<Eigen::Index>(flat_index(multi)));
}

void ProductTensor::set(const std::vector<int>& multi, Complex value) {
  data_(static_cast<Eigen::Index>(flat_index(multi))) = value;
}

ProductTensor apply_permutation(const ProductTensor& t, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != t.degree()) {
    throw std::invalid_argument("apply_permutation: length mismatch");
  }
  if (!is_permutation(perm)) throw std::invalid_argument("apply_permutation: not a permutation");
  const int d = t.dim();
  const int r = t.degree();
  ProductTensor out(d, r, std::max(t.size(), kProductSizeCap));
  if (t.size() == 0) return out;

  std::vector<int> multi(static_cast<std::size_t>(r), 0);
  std::vector<int> src(static_cast<std::size_t>(r), 0);
  const std::size_t total = t.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    // Decode flat -> multi (first slot most significant).
    std::size_t rest = flat;
    for (int j = r - 1; j >= 0; --j) {
      multi[static_cast<std::size_t>(j)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    for (int j = 0; j < r; ++j) {
      src[static_cast<std::size_t>(j)] = multi[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    }
    out.data()(static_cast<Eigen::Index>(flat)) = t.at(src);
  }
  return out;
}

ProductTensor embed_full(const AntiSymTensor& a, std::size_t size_cap) {
  const int d = a.dim();
  const int r = a.degree();
  ProductTensor out(d, r, size_cap);
  if (out.size() == 0) return out;

  double factorial = 1.0;
  for (int i = 2; i <= r; ++i) factorial *= i;
  const double scale = 1.0 / std::sqrt(factorial);

  std::vector<int> slots(static_cast<std::size_t>(r));
  for (const auto& [mask, c] : a.coeffs()) {
    const std::vector<int> indices = mask_indices(mask);
    for_each_permutation(r, [&](const std::vector<int>& perm, int sign) {
      for (int j = 0; j < r; ++j) {
        slots[static_cast<std::size_t>(j)] = indices[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      }
      const std::size_t flat = out.flat_index(slots);
      out.data()(static_cast<Eigen::Index>(flat)) += scale * static_cast<double>(sign) * c;
    });
  }
  return out;
}

AntiSymTensor antisymmetrize(const ProductTensor& t) {
  const int d = t.dim();
  const int r = t.degree();
  AntiSymTensor out(d, r);
  if (r > d) {
    // No combination keys exist; the projection onto the antisymmetric
    // sector of a space with repeated slots is zero.
    return out;
  }

  double factorial = 1.0;
  for (int i = 2; i <= r; ++i) factorial *= i;
  const double scale = 1.0 / std::sqrt(factorial);

  std::vector<int> slots(static_cast<std::size_t>(r));
  for (const Mask mask : combinations(d, r)) {
    const std::vector<int> indices = mask_indices(mask);
    Complex acc{0.0, 0.0};
    for_each_permutation(r, [&](const std::vector<int>& perm, int sign) {
      for (int j = 0; j < r; ++j) {
        slots[static_cast<std::size_t>(j)] = indices[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
      }
      acc += static_cast<double>(sign) * t.data()(static_cast<Eigen::Index>(t.flat_index(slots)));
    });
    const Complex value = scale * acc;
    if (value != Complex{0.0, 0.0}) out.set_coeff(mask, value);
  }
  return out;
}

Complex inner(const ProductTensor& a, const ProductTensor& b) {
  if (a.dim() != b.dim() || a.degree() != b.degree()) {
    throw std::invalid_argument("inner: shape mismatch");
  }
  return a.data().dot(b.data());
}

}  // namespace fermereo
