#pragma once

#include "framecipher/error.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace framecipher {

/// Signed 128-bit integer used for every key, garbage and ciphertext entry.
using Int = __int128;

inline constexpr Int kIntMax = static_cast<Int>(~static_cast<unsigned __int128>(0) >> 1);
inline constexpr Int kIntMin = -kIntMax - 1;

[[nodiscard]] inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

[[nodiscard]] inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

[[nodiscard]] inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

[[nodiscard]] inline Int checked_neg(Int a) {
    if (a == kIntMin) throw OverflowError("integer overflow in negation");
    return -a;
}

[[nodiscard]] inline Int abs_value(Int a) { return a < 0 ? checked_neg(a) : a; }

/// Decimal rendering; the standard library has no formatter for __int128.
[[nodiscard]] std::string to_string(Int value);

/// Parses an optionally signed decimal integer. Throws std::invalid_argument on
/// malformed text and OverflowError when the value does not fit.
[[nodiscard]] Int parse_int(std::string_view text);

} // namespace framecipher
