#include "framecipher/rational.hpp"

#include <stdexcept>
#include <utility>

namespace framecipher {

mpz_class to_mpz(Int value) {
    const bool negative = value < 0;
    unsigned __int128 magnitude =
        negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(value)
                 : static_cast<unsigned __int128>(value);
    const auto hi = static_cast<std::uint64_t>(magnitude >> 64);
    const auto lo = static_cast<std::uint64_t>(magnitude);
    mpz_class out = hi;
    out <<= 64;
    out += mpz_class(lo);
    if (negative) out = -out;
    return out;
}

Int to_int(const mpz_class& value) {
    if (mpz_sizeinbase(value.get_mpz_t(), 2) > 127)
        throw OverflowError("rational value does not fit in a 128-bit integer");
    mpz_class magnitude = abs(value);
    const mpz_class lo_mask = (mpz_class(1) << 64) - 1;
    const mpz_class lo_part = magnitude & lo_mask;
    const mpz_class hi_part = magnitude >> 64;
    const auto lo = static_cast<std::uint64_t>(mpz_get_ui(lo_part.get_mpz_t()));
    const auto hi = static_cast<std::uint64_t>(mpz_get_ui(hi_part.get_mpz_t()));
    const Int result = static_cast<Int>((static_cast<unsigned __int128>(hi) << 64) | lo);
    return sgn(value) < 0 ? -result : result;
}

RationalVector to_rational(std::span<const Int> v) {
    RationalVector out;
    out.reserve(v.size());
    for (Int x : v) out.emplace_back(to_mpz(x));
    return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rational(to_mpz(m(r, c)));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns) {
    if (columns.empty()) return {};
    RationalMatrix m(columns.front().size(), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != m.rows())
            throw std::invalid_argument("RationalMatrix::from_columns: ragged columns");
        for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
    }
    return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::is_zero() const { return framecipher::is_zero(entries_); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimension mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

RationalVector multiply(const RationalMatrix& m, std::span<const Rational> v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: size mismatch");
    RationalVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

RationalVector transpose_multiply(const RationalMatrix& m, std::span<const Rational> v) {
    if (m.rows() != v.size()) throw std::invalid_argument("transpose product: size mismatch");
    RationalVector out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (sgn(v[r]) == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += m(r, c) * v[r];
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product: size mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

void make_primitive(RationalVector& v) {
    mpz_class denominators = 1;
    for (const auto& x : v)
        if (sgn(x) != 0) mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(),
                                 x.get_den_mpz_t());
    mpz_class content = 0;
    for (const auto& x : v) {
        if (sgn(x) == 0) continue;
        const mpz_class scaled = x.get_num() * (denominators / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
    if (content == 0) return;
    const Rational factor(denominators, content);
    for (auto& x : v) x *= factor;
}

std::size_t rank(RationalMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<RationalMatrix> solve(RationalMatrix a, RationalMatrix b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && sgn(a(pivot, c)) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
            for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(c, j), b(pivot, j));
        }
        const Rational inv = 1 / a(c, c);
        for (std::size_t j = c; j < n; ++j) a(c, j) *= inv;
        for (std::size_t j = 0; j < b.cols(); ++j) b(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || sgn(a(i, c)) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(c, j);
        }
    }
    return b;
}

bool EchelonBasis::add(RationalVector v) {
    if (v.size() != dimension_) throw std::invalid_argument("EchelonBasis::add: wrong dimension");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (sgn(v[p]) == 0) continue;
        const Rational f = v[p] / rows_[k][p];
        for (std::size_t j = 0; j < dimension_; ++j)
            if (sgn(rows_[k][j]) != 0) v[j] -= f * rows_[k][j];
    }
    std::size_t pivot = 0;
    while (pivot < dimension_ && sgn(v[pivot]) == 0) ++pivot;
    if (pivot == dimension_) return false;
    make_primitive(v);
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

SubspaceProjector::SubspaceProjector(std::span<const RationalVector> basis) {
    if (basis.empty()) return;
    dimension_ = basis.front().size();
    for (const auto& b : basis) {
        if (b.size() != dimension_)
            throw std::invalid_argument("SubspaceProjector: basis vectors differ in length");
        RationalVector q = project_off(b);
        if (is_zero(q)) throw std::invalid_argument("SubspaceProjector: basis is linearly dependent");
        make_primitive(q);
        norms_.push_back(dot(q, q));
        orthogonal_.push_back(std::move(q));
    }
}

RationalVector SubspaceProjector::project_off(std::span<const Rational> v) const {
    RationalVector out(v.begin(), v.end());
    if (orthogonal_.empty()) return out;
    if (v.size() != dimension_) throw std::invalid_argument("SubspaceProjector: wrong dimension");
    for (std::size_t k = 0; k < orthogonal_.size(); ++k) {
        const Rational coeff = dot(v, orthogonal_[k]) / norms_[k];
        if (sgn(coeff) == 0) continue;
        for (std::size_t j = 0; j < dimension_; ++j) out[j] -= coeff * orthogonal_[k][j];
    }
    return out;
}

RationalVector project_off_subspace(std::span<const Rational> v,
                                    std::span<const RationalVector> basis) {
    return SubspaceProjector(basis).project_off(v);
}

} // namespace framecipher
