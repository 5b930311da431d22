#pragma once

#include "framecipher/matrix.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace framecipher {

/// Entry of a symbolic Hadamard array: ±x_index.
struct SignedIndeterminate {
    int sign = 1;
    std::size_t index = 0;

    friend bool operator==(const SignedIndeterminate&, const SignedIndeterminate&) = default;
};

/// h x h array of signed indeterminates, row-major.
struct ArrayPattern {
    std::size_t order = 0;
    std::vector<SignedIndeterminate> entries;

    [[nodiscard]] const SignedIndeterminate& at(std::size_t r, std::size_t c) const {
        return entries[r * order + c];
    }
};

/// Key material for one Hadamard array H[h,h,1]: the order h ∈ {2,4,8} and the
/// h integer values substituted for the indeterminates.
class HadamardArrayKey {
public:
    /// Throws std::invalid_argument for an unsupported order, a value count
    /// different from the order, or all-zero values.
    HadamardArrayKey(std::size_t order, std::vector<Int> values);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::span<const Int> values() const noexcept { return values_; }
    /// Σ values², the array's scale.
    [[nodiscard]] Int scale() const;

    friend bool operator==(const HadamardArrayKey&, const HadamardArrayKey&) = default;

private:
    std::size_t order_;
    std::vector<Int> values_;
};

[[nodiscard]] bool is_supported_array_order(std::size_t order) noexcept;

/// Sign/index layout for order 2, 4 or 8. Order 8 is H[8,8,1]; order 4 is its
/// top-left 4x4 block (quaternion pattern); order 2 is [[A,B],[-B,A]].
[[nodiscard]] const ArrayPattern& array_pattern(std::size_t order);

/// Substitutes the key values into the pattern. MᵀM = (Σ values²)·I.
[[nodiscard]] ScaledOrthogonalMatrix instantiate_array(const HadamardArrayKey& key);

/// Same substitution without the orthogonality verification, for hot loops
/// that instantiate thousands of guesses.
[[nodiscard]] IntMatrix instantiate_array_unchecked(std::size_t order, std::span<const Int> values);

/// ±1 matrix of size 2^p with HᵀH = 2^p·I.
class HadamardMatrix {
public:
    [[nodiscard]] const IntMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] std::size_t size() const noexcept { return matrix_.rows(); }

private:
    friend HadamardMatrix sylvester_hadamard(unsigned exponent, std::size_t size_cap);
    explicit HadamardMatrix(IntMatrix m) : matrix_(std::move(m)) {}
    IntMatrix matrix_;
};

inline constexpr std::size_t kDefaultHadamardSizeCap = std::size_t{1} << 10;

/// Sylvester recursion H_{2n} = [[H_n, H_n], [H_n, -H_n]] starting from [[1]].
/// Throws std::invalid_argument when 2^exponent exceeds size_cap.
[[nodiscard]] HadamardMatrix sylvester_hadamard(unsigned exponent,
                                                std::size_t size_cap = kDefaultHadamardSizeCap);

/// S = [[A, M·A], [-Mᵀ·A, A]] with scale k_a·(1 + k_m). Inputs must share a size.
[[nodiscard]] ScaledOrthogonalMatrix blow_up(const ScaledOrthogonalMatrix& a,
                                             const ScaledOrthogonalMatrix& m);

/// Orthonormal DCT-II matrix, zero-based: C[k][n] = λ_k·√(2/M)·cos(kπ(n+1/2)/M),
/// λ_0 = 1/√2, λ_k = 1 otherwise.
[[nodiscard]] RealMatrix dct_matrix(std::size_t size);

} // namespace framecipher
