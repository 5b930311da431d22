#include "framecipher/error.hpp"
#include "framecipher/hadamard.hpp"
#include "framecipher/matrix.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace framecipher;

TEST(Integer, CheckedArithmeticThrowsInsteadOfWrapping) {
    EXPECT_THROW((void)checked_add(kIntMax, Int{1}), OverflowError);
    EXPECT_THROW((void)checked_sub(kIntMin, Int{1}), OverflowError);
    EXPECT_THROW((void)checked_mul(kIntMax / 2 + 1, Int{2}), OverflowError);
    EXPECT_THROW((void)checked_neg(kIntMin), OverflowError);
    EXPECT_EQ(checked_mul(Int{-3}, Int{7}), Int{-21});
}

TEST(Integer, DecimalRoundTripCoversExtremes) {
    for (Int v : {Int{0}, Int{-1}, Int{42}, kIntMax, kIntMin, Int{1} << 100})
        EXPECT_EQ(parse_int(to_string(v)), v);
    EXPECT_EQ(to_string(kIntMin), "-170141183460469231731687303715884105728");
    EXPECT_THROW((void)parse_int("170141183460469231731687303715884105728"), std::invalid_argument);
    EXPECT_THROW((void)parse_int("12a"), std::invalid_argument);
    EXPECT_THROW((void)parse_int(""), std::invalid_argument);
}

TEST(Tensor, OneByOneIdentityIsNeutral) {
    const IntMatrix b{{2, -1, 4}, {0, 3, 5}};
    EXPECT_EQ(tensor(IntMatrix{{1}}, b), b);
}

TEST(Tensor, SylvesterDoubling) {
    const IntMatrix h2{{1, 1}, {1, -1}};
    EXPECT_EQ(tensor(h2, h2), (IntMatrix{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
}

TEST(Tensor, BlockExpansion) {
    const IntMatrix a{{2, 3}, {-3, 2}};
    const IntMatrix h2{{1, 1}, {1, -1}};
    EXPECT_EQ(tensor(a, h2), (IntMatrix{{2, 2, 3, 3}, {2, -2, 3, -3}, {-3, -3, 2, 2}, {-3, 3, 2, -2}}));
}

TEST(Tensor, MatchesBlockDefinitionOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix a = oracle::random_int_matrix(rng, 1 + trial % 3, 1 + trial % 4, -50, 50);
        const IntMatrix b = oracle::random_int_matrix(rng, 1 + trial % 5, 2, -50, 50);
        EXPECT_TRUE(oracle::equal(oracle::tensor(oracle::to_big(a), oracle::to_big(b)), tensor(a, b)));
    }
}

TEST(DirectSum, Concatenates) {
    const IntVector a{65}, b{2}, c{7}, d{0}, e{1, 2}, f{3, 4};
    EXPECT_EQ(direct_sum(a, b), (IntVector{65, 2}));
    EXPECT_EQ(direct_sum(c, d), (IntVector{7, 0}));
    EXPECT_EQ(direct_sum(e, f), (IntVector{1, 2, 3, 4}));
}

TEST(ScaledOrthogonal, IdentityHasScaleOne) {
    const auto m = check_scaled_orthogonal(IntMatrix::identity(5));
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->scale(), Int{1});
}

TEST(ScaledOrthogonal, OrderEightArrayWithOneThroughEight) {
    const IntMatrix h = instantiate_array_unchecked(8, std::vector<Int>{1, 2, 3, 4, 5, 6, 7, 8});
    const auto m = check_scaled_orthogonal(h);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(m->scale(), Int{204});
    EXPECT_EQ(oracle::scaled_orthogonal_scale(h), 204);
}

TEST(ScaledOrthogonal, RejectsRankDeficientAndZero) {
    EXPECT_FALSE(check_scaled_orthogonal(IntMatrix{{1, 1}, {1, 1}}).has_value());
    EXPECT_FALSE(check_scaled_orthogonal(IntMatrix(3, 3)).has_value());
    EXPECT_FALSE(check_scaled_orthogonal(IntMatrix{{1, 0}, {0, 2}}).has_value());
    EXPECT_THROW((void)check_scaled_orthogonal(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Product, MatchesArbitraryPrecisionOracle) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + trial % 7, k = 1 + trial % 5, m = 1 + trial % 6;
        const IntMatrix a = oracle::random_int_matrix(rng, n, k, -1'000'000'000'000LL, 1'000'000'000'000LL);
        const IntMatrix b = oracle::random_int_matrix(rng, k, m, -1'000'000'000'000LL, 1'000'000'000'000LL);
        EXPECT_TRUE(oracle::equal(oracle::multiply(oracle::to_big(a), oracle::to_big(b)), a * b));
    }
}

TEST(Product, OverflowIsDeterministic) {
    const Int big = Int{1} << 100;
    const IntMatrix a(1, 2, {big, big});
    const IntMatrix b(2, 1, {big, Int{1}});
    for (int i = 0; i < 3; ++i) EXPECT_THROW((void)(a * b), OverflowError);
    const IntMatrix c(1, 2, {kIntMax, Int{1}});
    const IntMatrix d(2, 1, {Int{1}, Int{1}});
    EXPECT_THROW((void)(c * d), OverflowError);
}

TEST(TensorProperties, TransposeDistributes) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix a = oracle::random_int_matrix(rng, 1 + trial % 3, 1 + (trial / 3) % 3, -9, 9);
        const IntMatrix b = oracle::random_int_matrix(rng, 1 + trial % 4, 1 + (trial / 4) % 4, -9, 9);
        EXPECT_EQ(tensor(a, b).transpose(), tensor(a.transpose(), b.transpose()));
    }
}

TEST(TensorProperties, MixedProduct) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 3, k = 1 + trial % 2, m = 2, p = 1 + trial % 4, q = 3, r = 1 + trial % 2;
        const IntMatrix a = oracle::random_int_matrix(rng, n, k, -9, 9);
        const IntMatrix c = oracle::random_int_matrix(rng, k, m, -9, 9);
        const IntMatrix b = oracle::random_int_matrix(rng, p, q, -9, 9);
        const IntMatrix d = oracle::random_int_matrix(rng, q, r, -9, 9);
        EXPECT_EQ(tensor(a, b) * tensor(c, d), tensor(a * c, b * d));
    }
}

TEST(TensorProperties, ScalesMultiply) {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long long> v(-20, 20);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> x(4), y(2);
        for (auto& e : x) e = v(rng);
        for (auto& e : y) e = v(rng);
        x[0] = x[0] == 0 ? 1 : x[0];
        y[1] = y[1] == 0 ? 1 : y[1];
        const auto a = instantiate_array(HadamardArrayKey(4, x));
        const auto b = instantiate_array(HadamardArrayKey(2, y));
        const auto t = tensor(a, b);
        EXPECT_EQ(t.scale(), a.scale() * b.scale());
        EXPECT_EQ(oracle::scaled_orthogonal_scale(t.matrix()), oracle::big(a.scale() * b.scale()));
    }
}

TEST(RealMatrixOps, UnitarityErrorOfIdentityIsZero) {
    EXPECT_EQ(max_unitarity_error(RealMatrix::identity(6)), 0.0);
    const RealMatrix m(IntMatrix{{1, 1}, {1, -1}});
    EXPECT_DOUBLE_EQ(max_unitarity_error(m), 1.0);
}
