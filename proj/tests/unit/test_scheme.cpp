#include "framecipher/cryptanalysis/scheme1_exposure.hpp"
#include "framecipher/error.hpp"
#include "framecipher/scheme.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

using namespace framecipher;

namespace {

Scheme5Key single_pair_key(Int a, Int b) { return Scheme5Key{{HadamardArrayKey(2, {a, b})}}; }

std::string random_ascii(std::mt19937_64& rng, std::size_t length) {
    std::uniform_int_distribution<int> d(0, 127);
    std::string s(length, '\0');
    for (char& c : s) c = static_cast<char>(d(rng));
    return s;
}

} // namespace

TEST(Keygen, SchemeFiveTwelveValuesInRange) {
    KeygenParams p;
    p.orders = {4, 4, 4};
    p.value_min = 5;
    p.value_max = 7;
    p.seed = 1;
    const SchemeKey key = keygen(p);
    EXPECT_EQ(key_value_count(key), 12u);
    for (const auto& a : std::get<Scheme5Key>(key).arrays)
        for (Int v : a.values()) {
            EXPECT_GE(v, 5);
            EXPECT_LE(v, 7);
        }
}

TEST(Keygen, ForcedOnesGiveScaleEight) {
    KeygenParams p;
    p.scheme = SchemeId::HadamardArray;
    p.value_min = p.value_max = 1;
    const auto m = build_integer_matrix(keygen(p));
    EXPECT_EQ(m.scale(), Int{8});
}

TEST(Keygen, DeterministicInSeed) {
    for (int s = 1; s <= 5; ++s) {
        KeygenParams p;
        p.scheme = scheme_from_int(s);
        p.orders = s == 3 ? std::vector<std::size_t>{2, 2} : std::vector<std::size_t>{4, 2};
        if (s == 4) p.orders = {2, 2};
        p.seed = 77;
        EXPECT_EQ(keygen(p), keygen(p));
        KeygenParams q = p;
        q.seed = 78;
        EXPECT_NE(keygen(p), keygen(q));
    }
}

TEST(Keygen, RejectsBadRanges) {
    KeygenParams p;
    p.orders = {4};
    p.value_min = 0;
    EXPECT_THROW((void)keygen(p), std::invalid_argument);
    p.value_min = 5;
    p.value_max = 4;
    EXPECT_THROW((void)keygen(p), std::invalid_argument);
    p.value_max = 6;
    p.orders.clear();
    EXPECT_THROW((void)keygen(p), std::invalid_argument);
}

TEST(BuildMatrix, SingleOrderTwoArray) {
    const auto m = build_integer_matrix(single_pair_key(3, 4));
    EXPECT_EQ(m.matrix(), (IntMatrix{{3, 4}, {-4, 3}}));
    EXPECT_EQ(m.scale(), Int{25});
}

TEST(BuildMatrix, TensorChainScaleIsProduct) {
    const Scheme5Key key{{HadamardArrayKey(4, {1, 2, 3, 4}), HadamardArrayKey(4, {5, 6, 7, 8})}};
    const auto m = build_integer_matrix(key);
    EXPECT_EQ(m.scale(), Int{30 * 174});
    EXPECT_EQ(oracle::scaled_orthogonal_scale(m.matrix()), 30 * 174);
}

TEST(BuildMatrix, PredictedScaleMatchesOracleForEveryScheme) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        KeygenParams p;
        p.scheme = scheme_from_int(2 + trial % 4);
        p.seed = rng();
        p.value_max = 1000;
        switch (p.scheme) {
        case SchemeId::BlowUp: p.orders = trial % 2 ? std::vector<std::size_t>{2, 2, 2, 2} : std::vector<std::size_t>{4, 4}; break;
        case SchemeId::HadamardTensor: p.orders = {2, 2}; p.hadamard_exponent = 1 + trial % 3; break;
        default: p.orders = {2, 4, 2}; break;
        }
        const SchemeKey key = keygen(p);
        const auto m = build_integer_matrix(key);
        EXPECT_EQ(m.scale(), predicted_scale(key));
        EXPECT_EQ(oracle::scaled_orthogonal_scale(m.matrix()), oracle::big(predicted_scale(key)));
    }
}

TEST(BuildMatrix, BlowUpSchemeMatchesOracleAssembly) {
    const Scheme3Key key{{{HadamardArrayKey(2, {3, 4}), HadamardArrayKey(2, {1, 2})},
                          {HadamardArrayKey(2, {2, 1}), HadamardArrayKey(2, {1, 1})}}};
    using oracle::to_big;
    const auto s1 = oracle::blow_up(to_big(instantiate_array(HadamardArrayKey(2, {3, 4})).matrix()),
                                    to_big(instantiate_array(HadamardArrayKey(2, {1, 2})).matrix()));
    const auto s2 = oracle::blow_up(to_big(instantiate_array(HadamardArrayKey(2, {2, 1})).matrix()),
                                    to_big(instantiate_array(HadamardArrayKey(2, {1, 1})).matrix()));
    const auto m = build_integer_matrix(key);
    EXPECT_TRUE(oracle::equal(oracle::blow_up(s1, s2), m.matrix()));
    EXPECT_EQ(m.scale(), Int{150} * (1 + 5 * 3));
}

TEST(BuildMatrix, SchemeThreeNeedsPowerOfTwoPairsOfEqualOrder) {
    const Scheme3Key three{{{HadamardArrayKey(2, {1, 1}), HadamardArrayKey(2, {1, 1})},
                            {HadamardArrayKey(2, {1, 1}), HadamardArrayKey(2, {1, 1})},
                            {HadamardArrayKey(2, {1, 1}), HadamardArrayKey(2, {1, 1})}}};
    EXPECT_THROW(validate(three), std::invalid_argument);
    const Scheme3Key mixed{{{HadamardArrayKey(2, {1, 1}), HadamardArrayKey(4, {1, 1, 1, 1})}}};
    EXPECT_THROW(validate(mixed), std::invalid_argument);
}

TEST(BuildMatrix, SchemeFourSparsityPattern) {
    const HadamardArrayKey a(4, {1, 2, 3, 4}), b(4, {2, 3, 5, 7});
    const auto m = build_integer_matrix(Scheme4Key{2, a, b});
    const IntMatrix am = instantiate_array(a).matrix();
    const IntMatrix bm = instantiate_array(b).matrix();
    const IntMatrix upper = scaled(bm * am, 4);
    const IntMatrix lower = scaled(bm.transpose() * am, -4);
    const IntMatrix h = sylvester_hadamard(2).matrix();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            EXPECT_EQ(m.matrix().block(4 * i, 4 * j, 4, 4), scaled(am, h(i, j)));
            EXPECT_EQ(m.matrix().block(16 + 4 * i, 16 + 4 * j, 4, 4), scaled(am, h(i, j)));
            EXPECT_EQ(m.matrix().block(4 * i, 16 + 4 * j, 4, 4), i == j ? upper : IntMatrix(4, 4));
            EXPECT_EQ(m.matrix().block(16 + 4 * i, 4 * j, 4, 4), i == j ? lower : IntMatrix(4, 4));
        }
    EXPECT_EQ(m.scale(), Int{4} * 30 * (1 + 4 * 87));
}

TEST(TextToBlocks, PaddingAndLength) {
    auto b = text_to_blocks("AB", 4);
    EXPECT_EQ(b.blocks, (std::vector<IntVector>{{65, 66, 0, 0}}));
    EXPECT_EQ(b.message_length, 2u);
    b = text_to_blocks("ABCD", 4);
    EXPECT_EQ(b.blocks, (std::vector<IntVector>{{65, 66, 67, 68}}));
    b = text_to_blocks("ABCDE", 4);
    EXPECT_EQ(b.blocks, (std::vector<IntVector>{{65, 66, 67, 68}, {69, 0, 0, 0}}));
    EXPECT_EQ(b.message_length, 5u);
    EXPECT_THROW((void)text_to_blocks("", 4), std::invalid_argument);
    EXPECT_THROW((void)text_to_blocks("caf\xc3\xa9", 4), std::invalid_argument);
}

TEST(Encode, HandExample) {
    const Cipher cipher(single_pair_key(3, 4));
    EXPECT_EQ(cipher.encrypt_block(IntVector{65, 2}), (IntVector{203, -254}));
}

TEST(Decode, HandExampleAndWrongKey) {
    CiphertextStream c;
    c.scheme = SchemeId::TensorChain;
    c.block_size = 2;
    c.message_length = 1;
    c.blocks = std::vector<IntVector>{{203, -254}};
    EXPECT_EQ(decode(single_pair_key(3, 4), c), "A");
    EXPECT_THROW((void)decode(single_pair_key(3, 5), c), CryptoError);
}

TEST(Decode, RejectsMismatchedStreams) {
    const SchemeKey key = single_pair_key(3, 4);
    CiphertextStream c = encode(key, "hi", GarbageSpec{});
    CiphertextStream wrong_scheme = c;
    wrong_scheme.scheme = SchemeId::HadamardArray;
    EXPECT_THROW((void)decode(key, wrong_scheme), CryptoError);
    CiphertextStream wrong_length = c;
    wrong_length.message_length = 5;
    EXPECT_THROW((void)decode(key, wrong_length), CryptoError);
    CiphertextStream tampered = c;
    std::get<std::vector<IntVector>>(tampered.blocks)[0][0] += 1;
    EXPECT_THROW((void)decode(key, tampered), CryptoError);
}

TEST(Garbage, NeverAllZeroAndWithinMagnitude) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 2000; ++i) {
        const IntVector g = draw_garbage(rng, 1, Int{1});
        ASSERT_EQ(g.size(), 1u);
        EXPECT_NE(g[0], 0);
        EXPECT_LE(abs_value(g[0]), 1);
    }
    EXPECT_THROW((void)draw_garbage(rng, 3, Int{0}), std::invalid_argument);
}

TEST(RoundTrip, IntegerSchemesRandomized) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        KeygenParams p;
        p.scheme = scheme_from_int(2 + trial % 4);
        p.seed = rng();
        p.value_max = 1 + static_cast<Int>(rng() % 200);
        switch (p.scheme) {
        case SchemeId::BlowUp: p.orders = {2, 2, 2, 2}; break;
        case SchemeId::HadamardTensor: p.orders = {2, 4}; break;
        default: p.orders = {4, 2}; break;
        }
        if (p.scheme == SchemeId::HadamardTensor) p.orders = {4, 4};
        const SchemeKey key = keygen(p);
        const std::string msg = random_ascii(rng, 1 + rng() % 300);
        const GarbageSpec g{1 + static_cast<Int>(rng() % 100000), rng()};
        EXPECT_EQ(decode(key, encode(key, msg, g)), msg);
    }
}

TEST(RoundTrip, DistinctGarbageDistinctCiphertext) {
    const SchemeKey key = Scheme5Key{{HadamardArrayKey(4, {5, 6, 7, 5})}};
    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto c = encode(key, "same", GarbageSpec{128, seed});
        std::string flat;
        for (const auto& b : c.integer_blocks())
            for (Int x : b) flat += to_string(x) + ",";
        seen.insert(flat);
    }
    EXPECT_EQ(seen.size(), 50u);
}

TEST(RoundTrip, EncodeIsPureInSeed) {
    const SchemeKey key = Scheme5Key{{HadamardArrayKey(4, {5, 6, 7, 5})}};
    EXPECT_EQ(encode(key, "determinism", GarbageSpec{1000, 5}), encode(key, "determinism", GarbageSpec{1000, 5}));
}

TEST(SchemeOne, IdentityWeightingReducesToDct) {
    Scheme1Key key;
    key.dct_size = 8;
    key.diagonal.assign(8, Rational(1));
    for (std::size_t i = 0; i < 8; ++i) key.permutation.push_back(i);
    const RealMatrix m = build_dct_matrix(key);
    const RealMatrix c = dct_matrix(8);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t k = 0; k < 8; ++k) EXPECT_DOUBLE_EQ(m(r, k), c(r, k));
    EXPECT_EQ(scheme1_decode(key, scheme1_encode(key, "frames", GarbageSpec{128, 3})), "frames");
}

TEST(SchemeOne, HelloRoundTrip) {
    KeygenParams p;
    p.scheme = SchemeId::Dct;
    p.dct_size = 16;
    p.seed = 12;
    const auto key = std::get<Scheme1Key>(keygen(p));
    for (std::uint64_t s = 0; s < 20; ++s)
        EXPECT_EQ(scheme1_decode(key, scheme1_encode(key, "HELLO", GarbageSpec{100000, s})), "HELLO");
}

TEST(SchemeOne, RejectsOddSizeAndSingularWeights) {
    Scheme1Key key;
    key.dct_size = 3;
    key.diagonal.assign(3, Rational(1));
    key.permutation = {0, 1, 2};
    EXPECT_THROW(validate(SchemeKey{key}), std::invalid_argument);
    key.dct_size = 2;
    key.diagonal = {Rational(1), Rational(0)};
    key.permutation = {1, 0};
    EXPECT_THROW(validate(SchemeKey{key}), std::invalid_argument);
    key.diagonal = {Rational(1), Rational(2)};
    key.permutation = {1, 1};
    EXPECT_THROW(validate(SchemeKey{key}), std::invalid_argument);
}

TEST(SchemeOne, WrongKeyIsDetected) {
    KeygenParams p;
    p.scheme = SchemeId::Dct;
    p.seed = 1;
    const auto key = std::get<Scheme1Key>(keygen(p));
    p.seed = 2;
    const auto other = std::get<Scheme1Key>(keygen(p));
    EXPECT_THROW((void)scheme1_decode(other, scheme1_encode(key, "attack at dawn", GarbageSpec{128, 1})), CryptoError);
}

TEST(SchemeOne, PublicTransformExposesWeightedPermutation) {
    KeygenParams p;
    p.scheme = SchemeId::Dct;
    p.dct_size = 8;
    p.seed = 4;
    const auto key = std::get<Scheme1Key>(keygen(p));
    const auto c = scheme1_encode(key, "DEMO", GarbageSpec{50, 9});
    const RealVector exposed = expose_scheme1_block(8, c.real_blocks()[0]);

    // Knowing D: divide out the weights and the multiset of |m ⊕ g| appears.
    std::vector<long long> recovered;
    for (std::size_t i = 0; i < 8; ++i)
        recovered.push_back(std::llround(std::fabs(exposed[i] / key.diagonal[i].get_d())));
    std::mt19937_64 rng(9);
    IntVector w = text_to_blocks("DEMO", 4).blocks[0];
    const IntVector g = draw_garbage(rng, 4, Int{50});
    w.insert(w.end(), g.begin(), g.end());
    std::vector<long long> expected;
    for (Int x : w) expected.push_back(static_cast<long long>(abs_value(x)));
    std::sort(recovered.begin(), recovered.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(recovered, expected);
}
