#include "framecipher/frame.hpp"
#include "framecipher/hadamard.hpp"
#include "framecipher/scheme.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace framecipher;

namespace {

RationalMatrix half_sylvester_columns(std::size_t first, std::size_t count) {
    const IntMatrix h = sylvester_hadamard(2).matrix();
    RationalMatrix out(4, count);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < count; ++c) out(r, c) = Rational(to_mpz(h(r, first + c)), 2);
    return out;
}

} // namespace

TEST(Parseval, SingleUnitColumn) {
    RealMatrix m(2, 1);
    m(0, 0) = m(1, 0) = 1.0 / std::sqrt(2.0);
    EXPECT_TRUE(is_parseval(FrameMatrixView(m)));
    EXPECT_TRUE(is_parseval(FrameMatrixView(IntMatrix{{1}, {1}}, 2)));
}

TEST(Parseval, HalfSylvesterColumns) {
    EXPECT_TRUE(is_parseval(FrameMatrixView(half_sylvester_columns(0, 2))));
}

TEST(Parseval, DuplicateRowBreaksIt) {
    EXPECT_FALSE(is_parseval(FrameMatrixView(IntMatrix{{1, 0}, {0, 1}, {0, 1}})));
    EXPECT_FALSE(is_parseval(FrameMatrixView(RealMatrix(IntMatrix{{1, 0}, {0, 1}, {0, 1}}))));
}

TEST(Parseval, RealToleranceIsTight) {
    RealMatrix m(IntMatrix::identity(3));
    m(0, 0) += 1e-10;
    EXPECT_FALSE(is_parseval(FrameMatrixView(m)));
    m(0, 0) = 1.0 + 1e-14;
    EXPECT_TRUE(is_parseval(FrameMatrixView(m)));
}

TEST(FrameView, RejectsUnderdeterminedOrBadScale) {
    EXPECT_THROW(FrameMatrixView(IntMatrix(2, 3)), std::invalid_argument);
    EXPECT_THROW(FrameMatrixView(IntMatrix::identity(2), 0), std::invalid_argument);
}

TEST(OrthogonalFrames, SplitOfScaledOrthogonalMatrix) {
    const auto m = instantiate_array(HadamardArrayKey(8, {1, 2, 3, 4, 5, 6, 7, 8}));
    const auto [fx, fy] = split_columns(m, 4);
    EXPECT_TRUE(are_orthogonal_frames(fx, fy));
    EXPECT_TRUE(are_orthogonal_frames(fy, fx));
    EXPECT_TRUE(is_parseval(fx));
    EXPECT_TRUE(is_parseval(fy));
}

TEST(OrthogonalFrames, HalvesOfSylvester) {
    const FrameMatrixView p(half_sylvester_columns(0, 2));
    const FrameMatrixView q(half_sylvester_columns(2, 2));
    EXPECT_TRUE(are_orthogonal_frames(p, q));
    EXPECT_TRUE(are_orthogonal_frames(q, p));
}

TEST(OrthogonalFrames, FrameIsNotOrthogonalToItself) {
    const FrameMatrixView p(half_sylvester_columns(0, 2));
    EXPECT_FALSE(are_orthogonal_frames(p, p));
}

TEST(OrthogonalFrames, MixedExactAndReal) {
    const RealMatrix c = dct_matrix(8);
    const auto [fx, fy] = split_columns(c, 4);
    EXPECT_TRUE(are_orthogonal_frames(fx, fy));
    EXPECT_TRUE(is_parseval(fx));
    const FrameMatrixView exact(IntMatrix::identity(8));
    EXPECT_THROW((void)are_orthogonal_frames(exact, FrameMatrixView(IntMatrix::identity(4))), std::invalid_argument);
}

TEST(RedundancyBound, Examples) {
    EXPECT_TRUE(redundancy_bound_ok(FrameMatrixView(IntMatrix(8, 4)), FrameMatrixView(IntMatrix(8, 4))));
    EXPECT_FALSE(redundancy_bound_ok(FrameMatrixView(IntMatrix(3, 2)), FrameMatrixView(IntMatrix(3, 2))));
    EXPECT_TRUE(redundancy_bound_ok(FrameMatrixView(IntMatrix(2, 1)), FrameMatrixView(IntMatrix(2, 1))));
}

TEST(FrameLayer, EveryBuiltMatrixSplitsIntoOrthogonalParsevalFrames) {
    for (int scheme = 2; scheme <= 5; ++scheme) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            KeygenParams p;
            p.scheme = scheme_from_int(scheme);
            p.orders = scheme == 3 ? std::vector<std::size_t>{4, 4, 4, 4} : std::vector<std::size_t>{4, 2};
            if (scheme == 4) p.orders = {2, 2};
            p.value_max = 30;
            p.seed = seed;
            const auto m = build_integer_matrix(keygen(p));
            const auto [fx, fy] = split_columns(m, m.size() / 2);
            EXPECT_TRUE(is_parseval(fx));
            EXPECT_TRUE(is_parseval(fy));
            EXPECT_TRUE(are_orthogonal_frames(fx, fy));
            EXPECT_TRUE(redundancy_bound_ok(fx, fy));
        }
    }
}
