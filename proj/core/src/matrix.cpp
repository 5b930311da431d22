#include "framecipher/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace framecipher {

namespace {

void require_same_shape(std::size_t ar, std::size_t ac, std::size_t br, std::size_t bc,
                        const char* what) {
    if (ar != br || ac != bc)
        throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw std::invalid_argument("IntMatrix: entry count does not match rows x cols");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long long v : r) entries_.push_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw std::invalid_argument("IntMatrix::block: out of range");
    IntMatrix out(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
        for (std::size_t c = 0; c < ncols; ++c) out(r, c) = (*this)(row0 + r, col0 + c);
    return out;
}

void IntMatrix::set_block(std::size_t row0, std::size_t col0, const IntMatrix& src) {
    if (row0 + src.rows() > rows_ || col0 + src.cols() > cols_)
        throw std::invalid_argument("IntMatrix::set_block: out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) (*this)(row0 + r, col0 + c) = src(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
        }
    }
    return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "matrix sum");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_add(a(r, c), b(r, c));
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "matrix difference");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_sub(a(r, c), b(r, c));
    return out;
}

IntMatrix operator-(const IntMatrix& a) { return scaled(a, -1); }

IntMatrix scaled(const IntMatrix& a, Int factor) {
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = checked_mul(a(r, c), factor);
    return out;
}

IntVector multiply(const IntMatrix& m, std::span<const Int> v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: size mismatch");
    IntVector out(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) out[r] = dot(m.row(r), v);
    return out;
}

IntVector transpose_multiply(const IntMatrix& m, std::span<const Int> v) {
    if (m.rows() != v.size()) throw std::invalid_argument("transpose product: size mismatch");
    IntVector out(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] = checked_add(out[c], checked_mul(m(r, c), v[r]));
    }
    return out;
}

IntMatrix gram(const IntMatrix& m) {
    const std::size_t n = m.cols();
    IntMatrix g(n, n);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto row = m.row(r);
        for (std::size_t i = 0; i < n; ++i) {
            if (row[i] == 0) continue;
            for (std::size_t j = i; j < n; ++j)
                g(i, j) = checked_add(g(i, j), checked_mul(row[i], row[j]));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i);
    return g;
}

IntMatrix tensor(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Int aij = a(i, j);
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = checked_mul(aij, b(p, q));
        }
    return out;
}

IntVector direct_sum(std::span<const Int> m, std::span<const Int> g) {
    IntVector out(m.begin(), m.end());
    out.insert(out.end(), g.begin(), g.end());
    return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot product: size mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
    return acc;
}

std::optional<ScaledOrthogonalMatrix> check_scaled_orthogonal(IntMatrix m) {
    if (!m.is_square()) throw std::invalid_argument("check_scaled_orthogonal: matrix is not square");
    if (m.rows() == 0) return std::nullopt;
    const IntMatrix g = gram(m);
    const Int k = g(0, 0);
    if (k <= 0) return std::nullopt;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            if (g(i, j) != (i == j ? k : 0)) return std::nullopt;
    return ScaledOrthogonalMatrix(std::move(m), k);
}

ScaledOrthogonalMatrix tensor(const ScaledOrthogonalMatrix& a, const ScaledOrthogonalMatrix& b) {
    auto product = check_scaled_orthogonal(tensor(a.matrix(), b.matrix()));
    if (!product || product->scale() != checked_mul(a.scale(), b.scale()))
        throw std::logic_error("tensor product of scaled-orthogonal matrices lost orthogonality");
    return *std::move(product);
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

RealMatrix::RealMatrix(const IntMatrix& m) : RealMatrix(m.rows(), m.cols()) {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = static_cast<double>(m(r, c));
}

RealMatrix RealMatrix::identity(std::size_t n) {
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::transpose() const {
    RealMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: inner dimension mismatch");
    RealMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RealMatrix operator+(const RealMatrix& a, const RealMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "matrix sum");
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

RealMatrix operator-(const RealMatrix& a, const RealMatrix& b) {
    require_same_shape(a.rows(), a.cols(), b.rows(), b.cols(), "matrix difference");
    RealMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

RealMatrix tensor(const RealMatrix& a, const RealMatrix& b) {
    RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return out;
}

RealVector multiply(const RealMatrix& m, std::span<const double> v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: size mismatch");
    RealVector out(m.rows(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

RealVector transpose_multiply(const RealMatrix& m, std::span<const double> v) {
    if (m.rows() != v.size()) throw std::invalid_argument("transpose product: size mismatch");
    RealVector out(m.cols(), 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[c] += m(r, c) * v[r];
    return out;
}

double max_unitarity_error(const RealMatrix& m) {
    const RealMatrix g = m.transpose() * m;
    double worst = 0.0;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

} // namespace framecipher
