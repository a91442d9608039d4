#pragma once

#include <cstdint>

#include "fermereo/occupancy.hpp"
#include "fermereo/product_tensor.hpp"

namespace fermereo {

// Knobs shared by the samplers, axiom checkers, and the CLI. Every random
// draw in a run derives from `seed`, so equal configs reproduce equal
// reports byte for byte.
struct RunConfig {
  std::uint64_t seed = 1;
  double epsilon = kDefaultEps;
  int samples = 64;
  std::size_t product_size_cap = kProductSizeCap;
  int matrix_cap = kMaxMatrixDim;

  // Throws std::invalid_argument unless epsilon > 0 and samples >= 1.
  void validate() const;
};

}  // namespace fermereo
