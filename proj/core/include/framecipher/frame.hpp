#pragma once

#include "framecipher/matrix.hpp"
#include "framecipher/rational.hpp"

#include <cstddef>
#include <utility>
#include <variant>

namespace framecipher {

/**
 * Analysis-operator view of a finite frame: an M x N matrix whose i-th row is
 * the frame vector x_i.
 *
 * Three representations are accepted:
 *  - an integer matrix Θ with a scale K, standing for the frame Θ/√K, so that
 *    Parseval means ΘᵀΘ = K·I and is checked exactly;
 *  - an exact rational matrix;
 *  - a double matrix (the DCT path), checked to a 1e-12 tolerance.
 *
 * Zero rows are kept: they do not change the analysis operator's Gram matrix
 * and dropping them would break the row pairing between two frames.
 */
class FrameMatrixView {
public:
    struct Scaled {
        IntMatrix analysis;
        Int scale = 1;
    };

    static constexpr double kRealTolerance = 1e-12;

    /// Throws std::invalid_argument when rows < cols or scale <= 0.
    explicit FrameMatrixView(IntMatrix analysis, Int scale = 1);
    explicit FrameMatrixView(RationalMatrix analysis);
    explicit FrameMatrixView(RealMatrix analysis);

    [[nodiscard]] std::size_t vector_count() const noexcept { return rows_; }  // M
    [[nodiscard]] std::size_t dimension() const noexcept { return cols_; }     // N
    [[nodiscard]] bool is_exact() const noexcept {
        return !std::holds_alternative<RealMatrix>(storage_);
    }

    /// Exact rational form of the analysis matrix (scaled views drop the 1/√K factor).
    [[nodiscard]] RationalMatrix exact_analysis() const;
    [[nodiscard]] RealMatrix real_analysis() const;

    [[nodiscard]] const std::variant<Scaled, RationalMatrix, RealMatrix>& storage() const noexcept {
        return storage_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<Scaled, RationalMatrix, RealMatrix> storage_;
};

/// ΘᵀΘ = I (exact forms) or within 1e-12 (double form).
[[nodiscard]] bool is_parseval(const FrameMatrixView& frame);

/// Θ_YᵀΘ_X = 0, i.e. the analysis operators have orthogonal ranges.
/// Throws std::invalid_argument when the frames have different row counts.
[[nodiscard]] bool are_orthogonal_frames(const FrameMatrixView& fx, const FrameMatrixView& fy);

/// M ≥ dim(H) + dim(K).
[[nodiscard]] bool redundancy_bound_ok(const FrameMatrixView& fx, const FrameMatrixView& fy);

/// Splits a scaled-orthogonal matrix column-wise into the message-band and
/// noise-band frames (Θ_X | Θ_Y), both carrying the matrix scale.
[[nodiscard]] std::pair<FrameMatrixView, FrameMatrixView>
split_columns(const ScaledOrthogonalMatrix& m, std::size_t message_dimension);

[[nodiscard]] std::pair<FrameMatrixView, FrameMatrixView>
split_columns(const RealMatrix& m, std::size_t message_dimension);

} // namespace framecipher
