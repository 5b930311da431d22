#pragma once

#include "framecipher/hadamard.hpp"
#include "framecipher/matrix.hpp"
#include "framecipher/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace framecipher {

enum class SchemeId : int {
    Dct = 1,            // c = C·D·P·(m ⊕ g)
    HadamardArray = 2,  // one instantiated H[8,8,1]
    BlowUp = 3,         // iterated [[A, MA], [-MᵀA, A]]
    HadamardTensor = 4, // blow-up of H⊗A by H⊗B with a Sylvester H
    TensorChain = 5,    // H_1 ⊗ H_2 ⊗ ... ⊗ H_p
};

[[nodiscard]] SchemeId scheme_from_int(int id);

/// DCT weighting scheme: diagonal D and permutation P over a DCT of even size.
/// (P·w)[i] = w[permutation[i]].
struct Scheme1Key {
    std::size_t dct_size = 0;
    std::vector<Rational> diagonal;
    std::vector<std::size_t> permutation;

    friend bool operator==(const Scheme1Key&, const Scheme1Key&) = default;
};

struct Scheme2Key {
    HadamardArrayKey array;

    friend bool operator==(const Scheme2Key&, const Scheme2Key&) = default;
};

/// Pairs (A_i, M_i) are blown up into S_i; the S_i are then blown up pairwise,
/// level by level, until one matrix remains. The pair count must be a power of
/// two and every array must have the same order.
struct Scheme3Key {
    std::vector<std::pair<HadamardArrayKey, HadamardArrayKey>> pairs;

    friend bool operator==(const Scheme3Key&, const Scheme3Key&) = default;
};

/// A and B must have the same order.
struct Scheme4Key {
    unsigned hadamard_exponent = 0;
    HadamardArrayKey a;
    HadamardArrayKey b;

    friend bool operator==(const Scheme4Key&, const Scheme4Key&) = default;
};

struct Scheme5Key {
    std::vector<HadamardArrayKey> arrays;

    friend bool operator==(const Scheme5Key&, const Scheme5Key&) = default;
};

using SchemeKey = std::variant<Scheme1Key, Scheme2Key, Scheme3Key, Scheme4Key, Scheme5Key>;

[[nodiscard]] SchemeId scheme_of(const SchemeKey& key);

/// Throws std::invalid_argument when a key invariant is violated.
void validate(const SchemeKey& key);

/// Ciphertext block length n (the encryption matrix size).
[[nodiscard]] std::size_t block_size(const SchemeKey& key);

/// Number of integers making up the key material (scheme 5: e_1 + ... + e_p).
[[nodiscard]] std::size_t key_value_count(const SchemeKey& key);

struct KeygenParams {
    SchemeId scheme = SchemeId::TensorChain;
    /// Scheme 3: 2·2^t equal orders, consumed pairwise. Scheme 4: {order(A), order(B)}.
    /// Scheme 5: order of each array. Ignored by schemes 1 and 2.
    std::vector<std::size_t> orders;
    unsigned hadamard_exponent = 2;
    std::size_t dct_size = 16;
    Int value_min = 1;
    Int value_max = 10;
    std::uint64_t seed = 0;
};

/// Draws every indeterminate (and, for scheme 1, every diagonal weight)
/// uniformly from [value_min, value_max]. Deterministic in the seed.
[[nodiscard]] SchemeKey keygen(const KeygenParams& params);

/// Closed-form scale of the integer schemes: Σ values² (2), iterated k(1+p) (3),
/// 2^p·k_A·(1 + 2^p·k_B) (4), Π k_i (5).
[[nodiscard]] Int predicted_scale(const SchemeKey& key);

/// Encryption matrix for schemes 2-5. Throws std::invalid_argument for scheme 1.
[[nodiscard]] ScaledOrthogonalMatrix build_integer_matrix(const SchemeKey& key);

/// C·D·P for scheme 1.
[[nodiscard]] RealMatrix build_dct_matrix(const Scheme1Key& key);

using EncryptionMatrix = std::variant<ScaledOrthogonalMatrix, RealMatrix>;
[[nodiscard]] EncryptionMatrix build_matrix(const SchemeKey& key);

struct GarbageSpec {
    Int magnitude = 128;
    std::uint64_t seed = 0;
};

struct CiphertextStream {
    SchemeId scheme = SchemeId::TensorChain;
    std::size_t block_size = 0;
    std::size_t message_length = 0;
    /// Integer blocks for schemes 2-5, double blocks for scheme 1.
    std::variant<std::vector<IntVector>, std::vector<RealVector>> blocks;

    [[nodiscard]] std::size_t block_count() const;
    [[nodiscard]] const std::vector<IntVector>& integer_blocks() const;
    [[nodiscard]] const std::vector<RealVector>& real_blocks() const;

    friend bool operator==(const CiphertextStream&, const CiphertextStream&) = default;
};

struct MessageBlocks {
    std::vector<IntVector> blocks;
    std::size_t message_length = 0;
};

/// Splits 7-bit ASCII text into blocks of half_block codes, zero-padding the
/// last. Throws std::invalid_argument on empty input or a byte above 127.
[[nodiscard]] MessageBlocks text_to_blocks(std::string_view message, std::size_t half_block);

/// Uniform integers in [-G, G]^length, redrawn while all-zero.
template <class Rng>
[[nodiscard]] IntVector draw_garbage(Rng& rng, std::size_t length, Int magnitude);

/**
 * Key-bound encoder/decoder. The encryption matrix is built once.
 *
 * Each block is the matrix applied to (message codes ⊕ garbage); decoding
 * applies the transpose, divides by the scale and keeps the message half.
 */
class Cipher {
public:
    explicit Cipher(SchemeKey key);

    [[nodiscard]] const SchemeKey& key() const noexcept { return key_; }
    [[nodiscard]] SchemeId scheme() const noexcept { return scheme_of(key_); }
    [[nodiscard]] std::size_t block_size() const noexcept { return block_size_; }
    [[nodiscard]] std::size_t message_band() const noexcept { return block_size_ / 2; }
    [[nodiscard]] const EncryptionMatrix& matrix() const noexcept { return matrix_; }

    [[nodiscard]] CiphertextStream encode(std::string_view message, const GarbageSpec& garbage) const;

    /// Throws CryptoError when the ciphertext does not decode under this key.
    [[nodiscard]] std::string decode(const CiphertextStream& ciphertext) const;

    /// Encrypts one already-assembled pre-image block m ⊕ g (integer schemes).
    [[nodiscard]] IntVector encrypt_block(std::span<const Int> preimage) const;

private:
    SchemeKey key_;
    EncryptionMatrix matrix_;
    std::size_t block_size_ = 0;
    RealVector inverse_diagonal_;
};

[[nodiscard]] CiphertextStream encode(const SchemeKey& key, std::string_view message,
                                      const GarbageSpec& garbage);
[[nodiscard]] std::string decode(const SchemeKey& key, const CiphertextStream& ciphertext);

[[nodiscard]] CiphertextStream scheme1_encode(const Scheme1Key& key, std::string_view message,
                                              const GarbageSpec& garbage);
[[nodiscard]] std::string scheme1_decode(const Scheme1Key& key, const CiphertextStream& ciphertext);

/// Largest distance to the nearest integer tolerated by the scheme-1 decoder.
inline constexpr double kScheme1RoundingLimit = 0.4;

} // namespace framecipher

#include "framecipher/detail/garbage.hpp"
