#pragma once

// Box-scan step shared by the parallel kernel and its serial reference.

#include <cstdint>
#include <cstdlib>
#include <optional>

#include "m0n/toric.hpp"

namespace m0n::detail {

// Number of coefficient vectors in [-bound, bound]^dim.
inline std::int64_t box_size(int dim, int bound) {
  std::int64_t total = 1;
  for (int k = 0; k < dim; ++k) total *= 2 * bound + 1;
  return total;
}

// Decodes candidate `index` of the box and returns its normalized class when
// it is nonzero, bounded by `bound` on every ray and halfline on every cone.
inline std::optional<FanFunctional> scan_candidate(const Fan& fan, int bound, std::int64_t index) {
  const int side = 2 * bound + 1;
  IntVector coeffs(fan.dim());
  bool nonzero = false;
  for (int k = 0; k < fan.dim(); ++k) {
    coeffs[k] = index % side - bound;
    index /= side;
    nonzero = nonzero || coeffs[k] != 0;
  }
  if (!nonzero) return std::nullopt;
  FanFunctional g{coeffs};
  for (const IntVector& ray : fan.rays()) {
    if (std::llabs(g(ray)) > bound) return std::nullopt;
  }
  if (!maps_cones_to_halflines(fan, g)) return std::nullopt;
  return normalize_functional(fan, std::move(coeffs));
}

}  // namespace m0n::detail
