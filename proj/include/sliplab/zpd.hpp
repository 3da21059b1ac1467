#pragma once

#include <cstdint>
#include <optional>

#include "sliplab/algebra.hpp"
#include "sliplab/config.hpp"

namespace sliplab {

// Zero-product-determined decision via the finite-dimensional criterion:
// span{ a⊗b : ab = 0 } must fill the kernel of the vectorized multiplication
// map, whose dimension is dim^2 - dim because multiplication is onto (unital).
struct ZpdReport {
  std::size_t span_dim = 0;
  std::size_t kernel_dim = 0;
  bool is_zpd = false;
  std::uint64_t points_processed = 0;
};

// Enumerates left factors projectively and takes the whole kernel of each
// L_v on the right: ab = 0 iff b in ker(L_a), and scalars do not change the
// spanned line of a⊗b.  Early stop once the span reaches kernel_dim.
ZpdReport is_zpd(const Algebra& a, const RunConfig& cfg = {});

// The multiplication map mu: A⊗A -> A as a dim x dim^2 matrix over the
// row-major pair index i*dim + j.
Matrix multiplication_matrix(const Algebra& a);

// A kernel element of mu outside the zero-product span, reshaped to a
// dim x dim coefficient matrix; nullopt when the algebra is zpd.
std::optional<Matrix> zpd_obstruction(const Algebra& a, const RunConfig& cfg = {});

}  // namespace sliplab
