#include "framecipher/cryptanalysis/cpa.hpp"

#include <stdexcept>

namespace framecipher {

namespace {

IntVector single_block(const CiphertextStream& c, std::size_t expected_length) {
    const auto& blocks = c.integer_blocks();
    if (blocks.size() != 1 || blocks.front().size() != expected_length)
        throw CryptoError("oracle block size is inconsistent with the stated band lengths");
    return blocks.front();
}

std::string plaintext_from_codes(std::span<const Int> codes) {
    std::string text;
    for (Int c : codes) text.push_back(static_cast<char>(c));
    return text;
}

} // namespace

KeyedOracle::KeyedOracle(SchemeKey key, Int garbage_magnitude, std::uint64_t seed)
    : cipher_(std::move(key)), garbage_magnitude_(garbage_magnitude), rng_(seed) {
    if (std::holds_alternative<RealMatrix>(cipher_.matrix()))
        throw std::invalid_argument("the chosen-plaintext oracle needs an integer scheme");
}

CiphertextStream KeyedOracle::encrypt(std::string_view plaintext) {
    ++calls_;
    return cipher_.encode(plaintext, GarbageSpec{garbage_magnitude_, rng_()});
}

NoiseBandEstimate discover_noise_band(EncryptionOracle& oracle, std::size_t message_band,
                                      std::size_t noise_band, std::size_t max_calls) {
    const std::size_t n = message_band + noise_band;
    const std::string fixed(message_band, 'A');
    NoiseBandEstimate out;
    const IntVector e0 = single_block(oracle.encrypt(fixed), n);
    out.oracle_calls = 1;

    EchelonBasis basis(n);
    while (basis.rank() < noise_band) {
        if (out.oracle_calls >= max_calls)
            throw CryptoError("noise band rank not reached within the oracle call cap");
        const IntVector ei = single_block(oracle.encrypt(fixed), n);
        ++out.oracle_calls;
        IntVector diff(n);
        for (std::size_t j = 0; j < n; ++j) diff[j] = checked_sub(ei[j], e0[j]);
        basis.add(to_rational(diff));
    }
    out.basis = basis.vectors();
    return out;
}

RecoveredMessageBand::RecoveredMessageBand(RationalMatrix analysis, Rational scale)
    : analysis_(std::move(analysis)), scale_(std::move(scale)) {
    if (sgn(scale_) <= 0) throw std::invalid_argument("recovered scale must be positive");
}

RationalVector RecoveredMessageBand::unencode_block(std::span<const Int> block) const {
    RationalVector v = transpose_multiply(analysis_, to_rational(block));
    for (auto& x : v) x /= scale_;
    return v;
}

std::string RecoveredMessageBand::decode(const CiphertextStream& ciphertext) const {
    std::string text;
    for (const auto& block : ciphertext.integer_blocks()) {
        if (block.size() != analysis_.rows()) throw CryptoError("ciphertext block has the wrong length");
        for (const auto& x : unencode_block(block)) {
            if (x.get_den() != 1 || x < 0 || x > 127)
                throw CryptoError("recovered band does not decode this ciphertext to ASCII");
            text.push_back(static_cast<char>(x.get_num().get_si()));
        }
    }
    if (ciphertext.message_length > text.size())
        throw CryptoError("ciphertext header message length exceeds its blocks");
    text.resize(ciphertext.message_length);
    return text;
}

CpaResult cpa_attack(EncryptionOracle& oracle, std::size_t message_band, std::size_t noise_band,
                     const CpaOptions& options) {
    if (message_band == 0 || noise_band == 0) throw std::invalid_argument("band lengths must be positive");
    if (oracle.message_band() != message_band || oracle.noise_band() != noise_band)
        throw std::invalid_argument("stated band lengths disagree with the oracle");
    if (options.basis_scale < 1 || options.basis_scale > 127)
        throw std::invalid_argument("basis plaintext code must be in 1..127");
    const std::size_t n = message_band + noise_band;

    // Step 1
    NoiseBandEstimate noise =
        discover_noise_band(oracle, message_band, noise_band, options.step1_call_factor * noise_band);
    const SubspaceProjector projector(noise.basis);
    auto project = [&](const IntVector& e) { return projector.project_off(to_rational(e)); };

    // Steps 2 and 3
    std::size_t step2_calls = 0;
    RationalMatrix analysis(n, message_band);
    if (options.basis_plaintexts) {
        const Rational s(options.basis_scale);
        for (std::size_t k = 0; k < message_band; ++k) {
            IntVector codes(message_band, 0);
            codes[k] = options.basis_scale;
            const RationalVector x = project(single_block(oracle.encrypt(plaintext_from_codes(codes)), n));
            ++step2_calls;
            for (std::size_t r = 0; r < n; ++r) analysis(r, k) = x[r] / s;
        }
    } else {
        std::mt19937_64 rng(options.seed);
        std::uniform_int_distribution<int> code(0, 127);
        EchelonBasis span_check(n);
        std::vector<RationalVector> plaintexts;
        std::vector<RationalVector> images;
        const std::size_t cap = options.step1_call_factor * message_band;
        while (plaintexts.size() < message_band) {
            if (step2_calls >= cap)
                throw CryptoError("message band rank not reached within the oracle call cap");
            IntVector codes(message_band);
            for (auto& c : codes) c = code(rng);
            RationalVector x = project(single_block(oracle.encrypt(plaintext_from_codes(codes)), n));
            ++step2_calls;
            if (!span_check.add(x)) continue;
            plaintexts.push_back(to_rational(codes));
            images.push_back(std::move(x));
        }
        // Θ_X·P = X  ⇔  Pᵀ·Θ_Xᵀ = Xᵀ
        const RationalMatrix p = RationalMatrix::from_columns(plaintexts);
        const RationalMatrix x = RationalMatrix::from_columns(images);
        auto solved = solve(p.transpose(), x.transpose());
        if (!solved) throw CryptoError("chosen plaintexts are singular: oracle is not linear");
        analysis = solved->transpose();
    }

    // Step 4: scale, plus structural and predictive consistency checks.
    const RationalVector first = analysis.column(0);
    const Rational k = dot(first, first);
    if (sgn(k) == 0) throw CryptoError("recovered message band is zero");
    if (analysis.transpose() * analysis != [&] {
            RationalMatrix ki = RationalMatrix::identity(message_band);
            for (std::size_t i = 0; i < message_band; ++i) ki(i, i) = k;
            return ki;
        }())
        throw CryptoError("recovered message band is not a scaled Parseval frame");

    IntVector probe(message_band);
    for (std::size_t i = 0; i < message_band; ++i) probe[i] = static_cast<Int>(32 + (7 * i + 3) % 95);
    const RationalVector observed = project(single_block(oracle.encrypt(plaintext_from_codes(probe)), n));
    if (multiply(analysis, to_rational(probe)) != observed)
        throw CryptoError("recovered message band does not predict the oracle: inconsistent solve");

    return CpaResult{RecoveredMessageBand(std::move(analysis), k), noise.oracle_calls, step2_calls, 1};
}

} // namespace framecipher
