#pragma once

#include "framecipher/rational.hpp"
#include "framecipher/scheme.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace framecipher {

/// Encryption service as seen by the attacker: plaintext in, ciphertext out,
/// fresh garbage on every call. The key never crosses this interface.
class EncryptionOracle {
public:
    virtual ~EncryptionOracle() = default;

    [[nodiscard]] virtual CiphertextStream encrypt(std::string_view plaintext) = 0;
    [[nodiscard]] virtual std::size_t message_band() const = 0;  // N_m
    [[nodiscard]] virtual std::size_t noise_band() const = 0;    // N_n
};

/// Oracle backed by a real key, for experiments against a known secret.
class KeyedOracle final : public EncryptionOracle {
public:
    KeyedOracle(SchemeKey key, Int garbage_magnitude, std::uint64_t seed);

    [[nodiscard]] CiphertextStream encrypt(std::string_view plaintext) override;
    [[nodiscard]] std::size_t message_band() const override { return cipher_.message_band(); }
    [[nodiscard]] std::size_t noise_band() const override {
        return cipher_.block_size() - cipher_.message_band();
    }
    [[nodiscard]] std::size_t calls() const noexcept { return calls_; }

private:
    Cipher cipher_;
    Int garbage_magnitude_;
    std::mt19937_64 rng_;
    std::size_t calls_ = 0;
};

struct CpaOptions {
    /// Step 2 plaintexts: scaled standard basis vectors (true) or random ASCII blocks.
    bool basis_plaintexts = true;
    /// Nonzero code placed at position k of the k-th basis plaintext.
    int basis_scale = 1;
    /// Step 1 gives up after this many multiples of N_n oracle calls.
    std::size_t step1_call_factor = 10;
    std::uint64_t seed = 0;
};

struct NoiseBandEstimate {
    std::vector<RationalVector> basis;  // spans the noise band range
    std::size_t oracle_calls = 0;       // including the reference encoding e_0
};

/// Step 1: encodes one fixed plaintext repeatedly; the differences e_i − e_0
/// lie in the noise band. Stops at rank N_n. Throws CryptoError when the call
/// cap is reached first.
[[nodiscard]] NoiseBandEstimate discover_noise_band(EncryptionOracle& oracle, std::size_t message_band,
                                                    std::size_t noise_band, std::size_t max_calls);

/// The attacker's reconstruction of the message band Θ_X (n x N_m) and scale K.
class RecoveredMessageBand {
public:
    RecoveredMessageBand(RationalMatrix analysis, Rational scale);

    [[nodiscard]] const RationalMatrix& analysis() const noexcept { return analysis_; }
    [[nodiscard]] const Rational& scale() const noexcept { return scale_; }

    /// (1/K)·(Θ_X | 0)ᵀ·e for one block.
    [[nodiscard]] RationalVector unencode_block(std::span<const Int> block) const;

    /// Decodes a whole stream. Throws CryptoError when a value is not an ASCII integer.
    [[nodiscard]] std::string decode(const CiphertextStream& ciphertext) const;

private:
    RationalMatrix analysis_;
    Rational scale_;
};

struct CpaResult {
    RecoveredMessageBand message_band;
    std::size_t step1_calls = 0;
    std::size_t step2_calls = 0;
    std::size_t verification_calls = 0;
};

/**
 * Chosen-plaintext recovery of the message band.
 *
 *  1. Noise band range from differences of repeated encodings.
 *  2. Encode N_m independent plaintexts and project each ciphertext off the
 *     noise band, leaving Θ_X·m_k exactly.
 *  3. Solve Θ_X·[m_1 … m_N] = [x_1 … x_N] (column assignment for basis plaintexts).
 *  4. K is the squared norm of a recovered column.
 *
 * One extra encryption checks that the recovered band predicts a fresh
 * projection. CryptoError on rank failure or when the oracle is not a
 * scaled-orthogonal linear cipher with the stated bands.
 */
[[nodiscard]] CpaResult cpa_attack(EncryptionOracle& oracle, std::size_t message_band,
                                   std::size_t noise_band, const CpaOptions& options = {});

} // namespace framecipher
