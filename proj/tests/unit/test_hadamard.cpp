#include "framecipher/hadamard.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace framecipher;

namespace {

std::vector<std::vector<oracle::Symbol>> library_pattern(std::size_t order) {
    const ArrayPattern& p = array_pattern(order);
    std::vector<std::vector<oracle::Symbol>> out(order);
    for (std::size_t r = 0; r < order; ++r)
        for (std::size_t c = 0; c < order; ++c)
            out[r].push_back({p.at(r, c).sign, static_cast<int>(p.at(r, c).index)});
    return out;
}

std::vector<Int> random_values(std::mt19937_64& rng, std::size_t n, long long lo, long long hi) {
    std::uniform_int_distribution<long long> d(lo, hi);
    std::vector<Int> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}

} // namespace

TEST(ArrayPattern, OrderEightMatchesPrintedArray) {
    const auto expected = oracle::reference_array(8);
    const auto actual = library_pattern(8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 8; ++c) {
            EXPECT_EQ(actual[r][c].sign, expected[r][c].sign) << r << ',' << c;
            EXPECT_EQ(actual[r][c].index, expected[r][c].index) << r << ',' << c;
        }
}

TEST(ArrayPattern, OrderFourIsTopLeftBlock) {
    const auto expected = oracle::reference_array(4);
    const auto actual = library_pattern(4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            EXPECT_EQ(actual[r][c].sign, expected[r][c].sign);
            EXPECT_EQ(actual[r][c].index, expected[r][c].index);
        }
}

TEST(ArrayPattern, OrderTwo) {
    const auto actual = library_pattern(2);
    const auto expected = oracle::two_by_two_array();
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            EXPECT_EQ(actual[r][c].sign, expected[r][c].sign);
            EXPECT_EQ(actual[r][c].index, expected[r][c].index);
        }
}

TEST(ArrayPattern, SymbolicArrayConditionsHold) {
    for (std::size_t order : {2u, 4u, 8u}) EXPECT_TRUE(oracle::satisfies_array_conditions(library_pattern(order)));
    auto broken = library_pattern(4);
    broken[1][1].sign = -broken[1][1].sign;
    EXPECT_FALSE(oracle::satisfies_array_conditions(broken));
}

TEST(InstantiateArray, SingleSurvivingIndeterminateGivesIdentity) {
    const auto m = instantiate_array(HadamardArrayKey(8, {1, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(m.matrix(), IntMatrix::identity(8));
    EXPECT_EQ(m.scale(), Int{1});
}

TEST(InstantiateArray, OrderTwoExample) {
    const auto m = instantiate_array(HadamardArrayKey(2, {3, 4}));
    EXPECT_EQ(m.matrix(), (IntMatrix{{3, 4}, {-4, 3}}));
    EXPECT_EQ(m.scale(), Int{25});
}

TEST(InstantiateArray, MatchesSubstitutionIntoPrintedPattern) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto v = random_values(rng, 8, -1000, 1000);
        const auto m = instantiate_array(HadamardArrayKey(8, v));
        EXPECT_EQ(m.matrix(), oracle::substitute(oracle::reference_array(8), v));
        Int k = 0;
        for (Int x : v) k += x * x;
        EXPECT_EQ(m.scale(), k);
    }
}

TEST(InstantiateArray, IsLinearInValues) {
    std::mt19937_64 rng(4);
    for (std::size_t order : {2u, 4u, 8u}) {
        auto v = random_values(rng, order, 1, 50);
        auto cv = v;
        for (auto& x : cv) x *= -7;
        EXPECT_EQ(instantiate_array(HadamardArrayKey(order, cv)).matrix(),
                  scaled(instantiate_array(HadamardArrayKey(order, v)).matrix(), -7));
    }
}

TEST(HadamardArrayKey, RejectsInvalidKeys) {
    EXPECT_THROW(HadamardArrayKey(4, {0, 0, 0, 0}), std::invalid_argument);
    EXPECT_THROW(HadamardArrayKey(3, {1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(HadamardArrayKey(1, {1}), std::invalid_argument);
    EXPECT_THROW(HadamardArrayKey(4, {1, 2}), std::invalid_argument);
    EXPECT_TRUE(is_supported_array_order(8));
    EXPECT_FALSE(is_supported_array_order(16));
}

TEST(Sylvester, SmallCases) {
    EXPECT_EQ(sylvester_hadamard(0).matrix(), (IntMatrix{{1}}));
    EXPECT_EQ(sylvester_hadamard(2).matrix(),
              (IntMatrix{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}}));
    const auto h3 = check_scaled_orthogonal(sylvester_hadamard(3).matrix());
    ASSERT_TRUE(h3.has_value());
    EXPECT_EQ(h3->scale(), Int{8});
}

TEST(Sylvester, MatchesPopcountFormula) {
    for (unsigned p = 0; p <= 7; ++p) EXPECT_EQ(sylvester_hadamard(p).matrix(), oracle::sylvester(p));
}

TEST(Sylvester, SizeCap) {
    EXPECT_NO_THROW((void)sylvester_hadamard(4, 16));
    EXPECT_THROW((void)sylvester_hadamard(5, 16), std::invalid_argument);
    EXPECT_THROW((void)sylvester_hadamard(11), std::invalid_argument);
}

TEST(BlowUp, SmallestCase) {
    const auto one = *check_scaled_orthogonal(IntMatrix{{1}});
    const auto s = blow_up(one, one);
    EXPECT_EQ(s.matrix(), (IntMatrix{{1, 1}, {-1, 1}}));
    EXPECT_EQ(s.scale(), Int{2});
}

TEST(BlowUp, OrderTwoPairGivesScale150) {
    const auto a = instantiate_array(HadamardArrayKey(2, {3, 4}));
    const auto m = instantiate_array(HadamardArrayKey(2, {1, 2}));
    const auto s = blow_up(a, m);
    EXPECT_EQ(s.scale(), Int{150});
    EXPECT_TRUE(oracle::equal(oracle::blow_up(oracle::to_big(a.matrix()), oracle::to_big(m.matrix())), s.matrix()));
    EXPECT_EQ(oracle::scaled_orthogonal_scale(s.matrix()), 150);
}

TEST(BlowUp, ScaleLawOnRandomInstantiations) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t order = std::size_t{2} << (trial % 3);
        const auto a = instantiate_array(HadamardArrayKey(order, random_values(rng, order, 1, 100)));
        const auto m = instantiate_array(HadamardArrayKey(order, random_values(rng, order, -100, 100)));
        const auto s = blow_up(a, m);
        EXPECT_EQ(oracle::scaled_orthogonal_scale(s.matrix()), oracle::big(a.scale() * (1 + m.scale())));
        EXPECT_EQ(s.scale(), a.scale() * (1 + m.scale()));
    }
}

TEST(BlowUp, ComposesWithItselfAndTensors) {
    const auto a = instantiate_array(HadamardArrayKey(2, {1, 2}));
    const auto b = instantiate_array(HadamardArrayKey(2, {2, 1}));
    const auto s = blow_up(a, b);
    const auto t = tensor(a, b);
    const auto u = blow_up(s, t);
    EXPECT_EQ(u.scale(), s.scale() * (1 + t.scale()));
    EXPECT_EQ(oracle::scaled_orthogonal_scale(u.matrix()), oracle::big(u.scale()));
}

TEST(BlowUp, SizeMismatchThrows) {
    const auto a = instantiate_array(HadamardArrayKey(2, {1, 2}));
    const auto b = instantiate_array(HadamardArrayKey(4, {1, 2, 3, 4}));
    EXPECT_THROW((void)blow_up(a, b), std::invalid_argument);
}

TEST(Dct, SizeOneAndTwo) {
    const RealMatrix c1 = dct_matrix(1);
    EXPECT_NEAR(c1(0, 0), 1.0, 1e-15);
    const RealMatrix c2 = dct_matrix(2);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(c2(0, 0), r, 1e-15);
    EXPECT_NEAR(c2(0, 1), r, 1e-15);
    EXPECT_NEAR(c2(1, 0), std::cos(M_PI / 4), 1e-15);
    EXPECT_NEAR(c2(1, 1), -std::cos(M_PI / 4), 1e-15);
    EXPECT_LT(max_unitarity_error(c2), 1e-12);
}

TEST(Dct, MatchesCosineFormulaAndIsUnitary) {
    for (std::size_t m : {2u, 4u, 8u, 16u, 64u, 100u}) {
        const RealMatrix c = dct_matrix(m);
        double worst = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t n = 0; n < m; ++n)
                worst = std::max(worst, static_cast<double>(std::fabs(c(k, n) - oracle::dct_entry(m, k, n))));
        EXPECT_LT(worst, 1e-14) << m;
        EXPECT_LT(max_unitarity_error(c), 1e-12) << m;
    }
    EXPECT_THROW((void)dct_matrix(0), std::invalid_argument);
}
