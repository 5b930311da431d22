#include "framecipher/frame.hpp"

#include <cmath>
#include <stdexcept>

namespace framecipher {

namespace {

void require_redundant(std::size_t rows, std::size_t cols) {
    if (rows < cols)
        throw std::invalid_argument("frame has fewer vectors than the space dimension");
}

template <class M>
M checked_shape(M analysis) {
    require_redundant(analysis.rows(), analysis.cols());
    return analysis;
}

FrameMatrixView::Scaled checked_scaled(IntMatrix analysis, Int scale) {
    if (scale <= 0) throw std::invalid_argument("frame scale must be positive");
    return FrameMatrixView::Scaled{checked_shape(std::move(analysis)), scale};
}

} // namespace

FrameMatrixView::FrameMatrixView(IntMatrix analysis, Int scale)
    : rows_(analysis.rows()), cols_(analysis.cols()), storage_(checked_scaled(std::move(analysis), scale)) {}

FrameMatrixView::FrameMatrixView(RationalMatrix analysis)
    : rows_(analysis.rows()), cols_(analysis.cols()), storage_(checked_shape(std::move(analysis))) {}

FrameMatrixView::FrameMatrixView(RealMatrix analysis)
    : rows_(analysis.rows()), cols_(analysis.cols()), storage_(checked_shape(std::move(analysis))) {}

RationalMatrix FrameMatrixView::exact_analysis() const {
    if (const auto* s = std::get_if<Scaled>(&storage_)) return RationalMatrix(s->analysis);
    if (const auto* r = std::get_if<RationalMatrix>(&storage_)) return *r;
    throw std::logic_error("floating-point frame has no exact form");
}

RealMatrix FrameMatrixView::real_analysis() const {
    if (const auto* s = std::get_if<Scaled>(&storage_)) {
        RealMatrix out(s->analysis);
        const double inv = 1.0 / std::sqrt(static_cast<double>(s->scale));
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) *= inv;
        return out;
    }
    if (const auto* q = std::get_if<RationalMatrix>(&storage_)) {
        RealMatrix out(q->rows(), q->cols());
        for (std::size_t r = 0; r < out.rows(); ++r)
            for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = (*q)(r, c).get_d();
        return out;
    }
    return std::get<RealMatrix>(storage_);
}

bool is_parseval(const FrameMatrixView& frame) {
    const auto& storage = frame.storage();
    if (const auto* s = std::get_if<FrameMatrixView::Scaled>(&storage)) {
        const IntMatrix g = gram(s->analysis);
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (g(i, j) != (i == j ? s->scale : 0)) return false;
        return true;
    }
    if (const auto* q = std::get_if<RationalMatrix>(&storage)) {
        return q->transpose() * *q == RationalMatrix::identity(q->cols());
    }
    return max_unitarity_error(std::get<RealMatrix>(storage)) < FrameMatrixView::kRealTolerance;
}

bool are_orthogonal_frames(const FrameMatrixView& fx, const FrameMatrixView& fy) {
    if (fx.vector_count() != fy.vector_count())
        throw std::invalid_argument("orthogonality check needs frames with the same number of vectors");
    if (fx.is_exact() && fy.is_exact())
        return (fy.exact_analysis().transpose() * fx.exact_analysis()).is_zero();
    const RealMatrix cross = fy.real_analysis().transpose() * fx.real_analysis();
    for (std::size_t r = 0; r < cross.rows(); ++r)
        for (std::size_t c = 0; c < cross.cols(); ++c)
            if (std::abs(cross(r, c)) >= FrameMatrixView::kRealTolerance) return false;
    return true;
}

bool redundancy_bound_ok(const FrameMatrixView& fx, const FrameMatrixView& fy) {
    return fx.vector_count() >= fx.dimension() + fy.dimension() &&
           fy.vector_count() >= fx.dimension() + fy.dimension();
}

std::pair<FrameMatrixView, FrameMatrixView> split_columns(const ScaledOrthogonalMatrix& m,
                                                          std::size_t message_dimension) {
    const std::size_t n = m.size();
    if (message_dimension > n) throw std::invalid_argument("split_columns: split beyond matrix width");
    return {FrameMatrixView(m.matrix().block(0, 0, n, message_dimension), m.scale()),
            FrameMatrixView(m.matrix().block(0, message_dimension, n, n - message_dimension),
                            m.scale())};
}

std::pair<FrameMatrixView, FrameMatrixView> split_columns(const RealMatrix& m,
                                                          std::size_t message_dimension) {
    const std::size_t n = m.cols();
    if (message_dimension > n) throw std::invalid_argument("split_columns: split beyond matrix width");
    RealMatrix left(m.rows(), message_dimension);
    RealMatrix right(m.rows(), n - message_dimension);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            if (c < message_dimension)
                left(r, c) = m(r, c);
            else
                right(r, c - message_dimension) = m(r, c);
        }
    return {FrameMatrixView(std::move(left)), FrameMatrixView(std::move(right))};
}

} // namespace framecipher
