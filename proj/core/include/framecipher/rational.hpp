#pragma once

#include "framecipher/integer.hpp"
#include "framecipher/matrix.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace framecipher {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

[[nodiscard]] mpz_class to_mpz(Int value);
/// Throws OverflowError when the value does not fit in Int.
[[nodiscard]] Int to_int(const mpz_class& value);

[[nodiscard]] RationalVector to_rational(std::span<const Int> v);

/// Dense row-major matrix of canonical rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    explicit RationalMatrix(const IntMatrix& m);

    [[nodiscard]] static RationalMatrix identity(std::size_t n);
    /// Matrix whose columns are the given vectors.
    [[nodiscard]] static RationalMatrix from_columns(std::span<const RationalVector> columns);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    [[nodiscard]] const Rational& operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    [[nodiscard]] RationalVector column(std::size_t c) const;
    [[nodiscard]] RationalMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

[[nodiscard]] RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
[[nodiscard]] RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v);
[[nodiscard]] RationalVector transpose_multiply(const RationalMatrix& m, std::span<const Rational> v);

[[nodiscard]] Rational dot(std::span<const Rational> a, std::span<const Rational> b);
[[nodiscard]] bool is_zero(std::span<const Rational> v);

/// Rank by exact elimination.
[[nodiscard]] std::size_t rank(RationalMatrix m);

/// Solves a·x = b for square nonsingular a. Empty when a is singular.
[[nodiscard]] std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b);

/// Incrementally maintained row-echelon basis; answers "does this vector
/// raise the rank" without refactoring from scratch.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dimension) : dimension_(dimension) {}

    /// Adds v if it is independent of the current span. Returns whether the rank grew.
    bool add(RationalVector v);

    [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    /// Reduced spanning vectors (primitive integer vectors, one per rank step).
    [[nodiscard]] const std::vector<RationalVector>& vectors() const noexcept { return rows_; }

private:
    std::size_t dimension_;
    std::vector<RationalVector> rows_;
    std::vector<std::size_t> pivots_;
};

/// Orthogonal projection onto the complement of span(basis).
class SubspaceProjector {
public:
    /// Throws std::invalid_argument when the basis is linearly dependent or ragged.
    explicit SubspaceProjector(std::span<const RationalVector> basis);

    /// Residual of v after removing its component in span(basis).
    [[nodiscard]] RationalVector project_off(std::span<const Rational> v) const;

    [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
    [[nodiscard]] std::size_t rank() const noexcept { return orthogonal_.size(); }

private:
    std::size_t dimension_ = 0;
    std::vector<RationalVector> orthogonal_;
    std::vector<Rational> norms_;
};

/// Exact residual of v after projecting off span(basis); orthogonal to every basis vector.
[[nodiscard]] RationalVector project_off_subspace(std::span<const Rational> v,
                                                  std::span<const RationalVector> basis);

/// Rescales v in place to a primitive integer vector (same direction, gcd 1).
void make_primitive(RationalVector& v);

} // namespace framecipher
