#include "framecipher/cryptanalysis/scheme1_exposure.hpp"

#include "framecipher/hadamard.hpp"

#include <stdexcept>

namespace framecipher {

RealVector expose_scheme1_block(std::size_t dct_size, std::span<const double> block) {
    if (block.size() != dct_size) throw std::invalid_argument("block length must match the DCT size");
    return transpose_multiply(dct_matrix(dct_size), block);
}

} // namespace framecipher
