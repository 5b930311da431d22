#pragma once

#include <limits>
#include <random>
#include <stdexcept>

namespace framecipher {

template <class Rng>
IntVector draw_garbage(Rng& rng, std::size_t length, Int magnitude) {
    if (magnitude < 1 || magnitude > std::numeric_limits<long long>::max() / 2)
        throw std::invalid_argument("garbage magnitude must be in [1, 2^62)");
    if (length == 0) throw std::invalid_argument("garbage vector must be nonempty");
    const auto g = static_cast<long long>(magnitude);
    std::uniform_int_distribution<long long> dist(-g, g);
    IntVector out(length);
    for (;;) {
        bool nonzero = false;
        for (auto& x : out) {
            x = dist(rng);
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return out;
    }
}

} // namespace framecipher
