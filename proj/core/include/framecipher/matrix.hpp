#pragma once

#include "framecipher/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace framecipher {

using IntVector = std::vector<Int>;
using RealVector = std::vector<double>;

/**
 * Dense row-major integer matrix with checked arithmetic.
 *
 * Every arithmetic helper in this header either returns the exact result or
 * throws OverflowError; nothing wraps around.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

    [[nodiscard]] static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }

    [[nodiscard]] Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    [[nodiscard]] const Int& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] std::span<const Int> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<const Int> entries() const noexcept { return entries_; }

    [[nodiscard]] IntMatrix transpose() const;
    [[nodiscard]] IntMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                                  std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const IntMatrix& src);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

[[nodiscard]] IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
[[nodiscard]] IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
[[nodiscard]] IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
[[nodiscard]] IntMatrix operator-(const IntMatrix& a);
[[nodiscard]] IntMatrix scaled(const IntMatrix& a, Int factor);

/// m · v
[[nodiscard]] IntVector multiply(const IntMatrix& m, std::span<const Int> v);
/// mᵀ · v without materializing the transpose.
[[nodiscard]] IntVector transpose_multiply(const IntMatrix& m, std::span<const Int> v);
/// mᵀ · m
[[nodiscard]] IntMatrix gram(const IntMatrix& m);

/// Kronecker product: block (i, j) of the result is a(i, j) · b.
[[nodiscard]] IntMatrix tensor(const IntMatrix& a, const IntMatrix& b);

/// Concatenation m ⊕ g.
[[nodiscard]] IntVector direct_sum(std::span<const Int> m, std::span<const Int> g);

[[nodiscard]] Int dot(std::span<const Int> a, std::span<const Int> b);

/// Square integer matrix M together with the constant k > 0 for which MᵀM = k·I.
/// Instances only come out of check_scaled_orthogonal, so the identity always holds.
class ScaledOrthogonalMatrix {
public:
    [[nodiscard]] const IntMatrix& matrix() const noexcept { return matrix_; }
    [[nodiscard]] Int scale() const noexcept { return scale_; }
    [[nodiscard]] std::size_t size() const noexcept { return matrix_.rows(); }

    friend bool operator==(const ScaledOrthogonalMatrix&, const ScaledOrthogonalMatrix&) = default;

private:
    friend std::optional<ScaledOrthogonalMatrix> check_scaled_orthogonal(IntMatrix m);
    ScaledOrthogonalMatrix(IntMatrix m, Int k) : matrix_(std::move(m)), scale_(k) {}

    IntMatrix matrix_;
    Int scale_ = 0;
};

/// Returns m wrapped with its scale when mᵀm = k·I exactly for some k > 0.
/// Throws std::invalid_argument for non-square input.
[[nodiscard]] std::optional<ScaledOrthogonalMatrix> check_scaled_orthogonal(IntMatrix m);

/// Tensor product of two scaled-orthogonal matrices; the scale is the product.
[[nodiscard]] ScaledOrthogonalMatrix tensor(const ScaledOrthogonalMatrix& a,
                                            const ScaledOrthogonalMatrix& b);

/// Dense row-major double matrix. Only the DCT scheme and the perturbation
/// study work in floating point.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols);
    explicit RealMatrix(const IntMatrix& m);

    [[nodiscard]] static RealMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    [[nodiscard]] double operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    [[nodiscard]] std::span<const double> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    [[nodiscard]] RealMatrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

[[nodiscard]] RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
[[nodiscard]] RealMatrix operator+(const RealMatrix& a, const RealMatrix& b);
[[nodiscard]] RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
[[nodiscard]] RealMatrix tensor(const RealMatrix& a, const RealMatrix& b);
[[nodiscard]] RealVector multiply(const RealMatrix& m, std::span<const double> v);
[[nodiscard]] RealVector transpose_multiply(const RealMatrix& m, std::span<const double> v);

/// max |mᵀm − I| over all entries.
[[nodiscard]] double max_unitarity_error(const RealMatrix& m);

[[nodiscard]] double norm2(std::span<const double> v);

} // namespace framecipher
