#include "framecipher/hadamard.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>

namespace framecipher {

namespace {

// H[8,8,1] over A..H; a leading '-' negates.
constexpr std::array<std::array<std::string_view, 8>, 8> kOrder8Layout{{
    {"A", "B", "C", "D", "E", "F", "G", "H"},
    {"-B", "A", "D", "-C", "F", "-E", "-H", "G"},
    {"-C", "-D", "A", "B", "G", "H", "-E", "-F"},
    {"-D", "C", "-B", "A", "H", "-G", "F", "-E"},
    {"-E", "-F", "-G", "-H", "A", "B", "C", "D"},
    {"-F", "E", "-H", "G", "-B", "A", "-D", "C"},
    {"-G", "H", "E", "-F", "-C", "D", "A", "-B"},
    {"-H", "-G", "F", "E", "-D", "-C", "B", "A"},
}};

ArrayPattern make_pattern(std::size_t order) {
    ArrayPattern p;
    p.order = order;
    p.entries.reserve(order * order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c) {
            std::string_view cell = kOrder8Layout[r][c];
            SignedIndeterminate e;
            if (cell.front() == '-') {
                e.sign = -1;
                cell.remove_prefix(1);
            }
            e.index = static_cast<std::size_t>(cell.front() - 'A');
            p.entries.push_back(e);
        }
    return p;
}

ArrayPattern make_order2_pattern() {
    ArrayPattern p;
    p.order = 2;
    p.entries = {{1, 0}, {1, 1}, {-1, 1}, {1, 0}};
    return p;
}

} // namespace

bool is_supported_array_order(std::size_t order) noexcept {
    return order == 2 || order == 4 || order == 8;
}

HadamardArrayKey::HadamardArrayKey(std::size_t order, std::vector<Int> values)
    : order_(order), values_(std::move(values)) {
    if (!is_supported_array_order(order_))
        throw std::invalid_argument("Hadamard array order must be 2, 4 or 8");
    if (values_.size() != order_)
        throw std::invalid_argument("Hadamard array needs exactly one value per indeterminate");
    bool any_nonzero = false;
    for (Int v : values_) any_nonzero = any_nonzero || v != 0;
    if (!any_nonzero) throw std::invalid_argument("Hadamard array values are all zero");
}

Int HadamardArrayKey::scale() const {
    Int k = 0;
    for (Int v : values_) k = checked_add(k, checked_mul(v, v));
    return k;
}

const ArrayPattern& array_pattern(std::size_t order) {
    // The order-4 pattern is the top-left block of the order-8 layout, which
    // uses only A..D there.
    static const ArrayPattern order2 = make_order2_pattern();
    static const ArrayPattern order4 = make_pattern(4);
    static const ArrayPattern order8 = make_pattern(8);
    switch (order) {
    case 2: return order2;
    case 4: return order4;
    case 8: return order8;
    default: throw std::invalid_argument("Hadamard array order must be 2, 4 or 8");
    }
}

IntMatrix instantiate_array_unchecked(std::size_t order, std::span<const Int> values) {
    const ArrayPattern& pattern = array_pattern(order);
    if (values.size() != order)
        throw std::invalid_argument("Hadamard array needs exactly one value per indeterminate");
    IntMatrix m(order, order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c) {
            const auto& e = pattern.at(r, c);
            m(r, c) = e.sign < 0 ? checked_neg(values[e.index]) : values[e.index];
        }
    return m;
}

ScaledOrthogonalMatrix instantiate_array(const HadamardArrayKey& key) {
    auto m = check_scaled_orthogonal(instantiate_array_unchecked(key.order(), key.values()));
    if (!m || m->scale() != key.scale())
        throw std::logic_error("instantiated Hadamard array is not scaled-orthogonal");
    return *std::move(m);
}

HadamardMatrix sylvester_hadamard(unsigned exponent, std::size_t size_cap) {
    if (exponent >= 63 || (std::size_t{1} << exponent) > size_cap)
        throw std::invalid_argument("Hadamard matrix size exceeds the configured cap");
    IntMatrix h{{1}};
    for (unsigned step = 0; step < exponent; ++step) {
        const std::size_t n = h.rows();
        IntMatrix next(2 * n, 2 * n);
        next.set_block(0, 0, h);
        next.set_block(0, n, h);
        next.set_block(n, 0, h);
        next.set_block(n, n, -h);
        h = std::move(next);
    }
    return HadamardMatrix(std::move(h));
}

ScaledOrthogonalMatrix blow_up(const ScaledOrthogonalMatrix& a, const ScaledOrthogonalMatrix& m) {
    if (a.size() != m.size()) throw std::invalid_argument("blow_up: matrices differ in size");
    const std::size_t n = a.size();
    const IntMatrix ma = m.matrix() * a.matrix();
    const IntMatrix mta = m.matrix().transpose() * a.matrix();
    IntMatrix s(2 * n, 2 * n);
    s.set_block(0, 0, a.matrix());
    s.set_block(0, n, ma);
    s.set_block(n, 0, -mta);
    s.set_block(n, n, a.matrix());
    const Int expected = checked_mul(a.scale(), checked_add(1, m.scale()));
    auto result = check_scaled_orthogonal(std::move(s));
    if (!result || result->scale() != expected)
        throw std::logic_error("blow_up produced a matrix that is not scaled-orthogonal");
    return *std::move(result);
}

RealMatrix dct_matrix(std::size_t size) {
    if (size == 0) throw std::invalid_argument("DCT size must be positive");
    RealMatrix c(size, size);
    const double m = static_cast<double>(size);
    const double base = std::sqrt(2.0 / m);
    for (std::size_t k = 0; k < size; ++k) {
        const double lambda = k == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
        for (std::size_t n = 0; n < size; ++n)
            c(k, n) = lambda * base *
                      std::cos(static_cast<double>(k) * std::numbers::pi *
                               (static_cast<double>(n) + 0.5) / m);
    }
    return c;
}

} // namespace framecipher
