#pragma once

#include "framecipher/matrix.hpp"

#include <cstddef>
#include <span>

namespace framecipher {

/// Undoes the public DCT of a scheme-1 block: Cᵀ·c = D·P·(m ⊕ g). Only the
/// weighting and the permutation remain secret after this step.
[[nodiscard]] RealVector expose_scheme1_block(std::size_t dct_size, std::span<const double> block);

} // namespace framecipher
