#include "framecipher/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace framecipher {

std::string to_string(Int value) {
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work in the negative range so kIntMin renders without overflow.
    Int v = negative ? value : -value;
    std::string digits;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw std::invalid_argument("integer literal has no digits");
    Int acc = 0;
    for (; pos < text.size(); ++pos) {
        const char ch = text[pos];
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("malformed integer literal: " + std::string(text));
        // Accumulate negatively to reach kIntMin.
        if (acc < (kIntMin + (ch - '0')) / 10)
            throw std::invalid_argument("integer literal out of 128-bit range: " + std::string(text));
        acc = acc * 10 - (ch - '0');
    }
    if (!negative && acc == kIntMin)
        throw std::invalid_argument("integer literal out of 128-bit range: " + std::string(text));
    return negative ? acc : -acc;
}

} // namespace framecipher
