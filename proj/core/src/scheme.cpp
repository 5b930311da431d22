#include "framecipher/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace framecipher {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void validate_scheme1(const Scheme1Key& key) {
    if (key.dct_size == 0 || key.dct_size % 2 != 0)
        throw std::invalid_argument("scheme 1 needs a positive even DCT size");
    if (key.diagonal.size() != key.dct_size || key.permutation.size() != key.dct_size)
        throw std::invalid_argument("scheme 1 diagonal and permutation must match the DCT size");
    for (const auto& d : key.diagonal)
        if (sgn(d) == 0) throw std::invalid_argument("scheme 1 diagonal entries must be nonzero");
    std::vector<bool> seen(key.dct_size, false);
    for (std::size_t p : key.permutation) {
        if (p >= key.dct_size || seen[p])
            throw std::invalid_argument("scheme 1 permutation is not a bijection");
        seen[p] = true;
    }
}

void validate_scheme3(const Scheme3Key& key) {
    if (!is_power_of_two(key.pairs.size()))
        throw std::invalid_argument("scheme 3 needs a power-of-two number of array pairs");
    const std::size_t order = key.pairs.front().first.order();
    for (const auto& [a, m] : key.pairs)
        if (a.order() != order || m.order() != order)
            throw std::invalid_argument("scheme 3 arrays must all have the same order");
}

ScaledOrthogonalMatrix hadamard_as_scaled(unsigned exponent) {
    auto h = check_scaled_orthogonal(sylvester_hadamard(exponent).matrix());
    if (!h) throw std::logic_error("Sylvester matrix is not orthogonal");
    return *std::move(h);
}

std::uniform_int_distribution<long long> value_distribution(Int lo, Int hi) {
    if (lo < 1) throw std::invalid_argument("key value range must start at 1 or above");
    if (lo > hi) throw std::invalid_argument("key value range is empty");
    if (hi > std::numeric_limits<long long>::max())
        throw std::invalid_argument("key value range exceeds 64-bit values");
    return std::uniform_int_distribution<long long>(static_cast<long long>(lo),
                                                    static_cast<long long>(hi));
}

HadamardArrayKey draw_array(std::size_t order, std::mt19937_64& rng,
                            std::uniform_int_distribution<long long>& dist) {
    std::vector<Int> values(order);
    for (auto& v : values) v = dist(rng);
    return HadamardArrayKey(order, std::move(values));
}

} // namespace

SchemeId scheme_from_int(int id) {
    if (id < 1 || id > 5) throw std::invalid_argument("scheme id must be 1..5");
    return static_cast<SchemeId>(id);
}

SchemeId scheme_of(const SchemeKey& key) {
    return static_cast<SchemeId>(key.index() + 1);
}

void validate(const SchemeKey& key) {
    std::visit(Overloaded{
                   [](const Scheme1Key& k) { validate_scheme1(k); },
                   [](const Scheme2Key& k) {
                       if (k.array.order() != 8)
                           throw std::invalid_argument("scheme 2 uses an order-8 array");
                   },
                   [](const Scheme3Key& k) { validate_scheme3(k); },
                   [](const Scheme4Key& k) {
                       if (k.a.order() != k.b.order())
                           throw std::invalid_argument("scheme 4 arrays must have the same order");
                       (void)sylvester_hadamard(k.hadamard_exponent);
                   },
                   [](const Scheme5Key& k) {
                       if (k.arrays.empty())
                           throw std::invalid_argument("scheme 5 needs at least one array");
                   },
               },
               key);
}

std::size_t block_size(const SchemeKey& key) {
    return std::visit(
        Overloaded{
            [](const Scheme1Key& k) { return k.dct_size; },
            [](const Scheme2Key&) { return std::size_t{8}; },
            [](const Scheme3Key& k) { return k.pairs.front().first.order() * 2 * k.pairs.size(); },
            [](const Scheme4Key& k) {
                return 2 * (std::size_t{1} << k.hadamard_exponent) * k.a.order();
            },
            [](const Scheme5Key& k) {
                std::size_t n = 1;
                for (const auto& a : k.arrays) n *= a.order();
                return n;
            },
        },
        key);
}

std::size_t key_value_count(const SchemeKey& key) {
    return std::visit(Overloaded{
                          [](const Scheme1Key& k) { return 2 * k.dct_size; },
                          [](const Scheme2Key&) { return std::size_t{8}; },
                          [](const Scheme3Key& k) {
                              return 2 * k.pairs.size() * k.pairs.front().first.order();
                          },
                          [](const Scheme4Key& k) { return k.a.order() + k.b.order(); },
                          [](const Scheme5Key& k) {
                              std::size_t n = 0;
                              for (const auto& a : k.arrays) n += a.order();
                              return n;
                          },
                      },
                      key);
}

SchemeKey keygen(const KeygenParams& params) {
    std::mt19937_64 rng(params.seed);
    auto dist = value_distribution(params.value_min, params.value_max);
    SchemeKey key = [&]() -> SchemeKey {
        switch (params.scheme) {
        case SchemeId::Dct: {
            Scheme1Key k;
            k.dct_size = params.dct_size;
            for (std::size_t i = 0; i < params.dct_size; ++i) k.diagonal.push_back(Rational(to_mpz(static_cast<Int>(dist(rng)))));
            k.permutation.resize(params.dct_size);
            std::iota(k.permutation.begin(), k.permutation.end(), std::size_t{0});
            std::shuffle(k.permutation.begin(), k.permutation.end(), rng);
            return k;
        }
        case SchemeId::HadamardArray:
            return Scheme2Key{draw_array(8, rng, dist)};
        case SchemeId::BlowUp: {
            if (params.orders.empty() || params.orders.size() % 2 != 0)
                throw std::invalid_argument("scheme 3 needs an even, nonempty order list");
            Scheme3Key k;
            for (std::size_t i = 0; i < params.orders.size(); i += 2) {
                auto a = draw_array(params.orders[i], rng, dist);
                auto m = draw_array(params.orders[i + 1], rng, dist);
                k.pairs.emplace_back(std::move(a), std::move(m));
            }
            return k;
        }
        case SchemeId::HadamardTensor: {
            if (params.orders.size() != 2)
                throw std::invalid_argument("scheme 4 needs exactly two array orders");
            auto a = draw_array(params.orders[0], rng, dist);
            auto b = draw_array(params.orders[1], rng, dist);
            return Scheme4Key{params.hadamard_exponent, std::move(a), std::move(b)};
        }
        case SchemeId::TensorChain: {
            if (params.orders.empty())
                throw std::invalid_argument("scheme 5 needs at least one array order");
            Scheme5Key k;
            for (std::size_t order : params.orders) k.arrays.push_back(draw_array(order, rng, dist));
            return k;
        }
        }
        throw std::invalid_argument("unknown scheme");
    }();
    validate(key);
    return key;
}

Int predicted_scale(const SchemeKey& key) {
    return std::visit(
        Overloaded{
            [](const Scheme1Key&) -> Int {
                throw std::invalid_argument("scheme 1 is unitary and has no integer scale");
            },
            [](const Scheme2Key& k) { return k.array.scale(); },
            [](const Scheme3Key& k) {
                std::vector<Int> level;
                for (const auto& [a, m] : k.pairs)
                    level.push_back(checked_mul(a.scale(), checked_add(1, m.scale())));
                while (level.size() > 1) {
                    std::vector<Int> next;
                    for (std::size_t i = 0; i < level.size(); i += 2)
                        next.push_back(checked_mul(level[i], checked_add(1, level[i + 1])));
                    level = std::move(next);
                }
                return level.front();
            },
            [](const Scheme4Key& k) {
                const Int h = Int{1} << k.hadamard_exponent;
                return checked_mul(checked_mul(h, k.a.scale()),
                                   checked_add(1, checked_mul(h, k.b.scale())));
            },
            [](const Scheme5Key& k) {
                Int s = 1;
                for (const auto& a : k.arrays) s = checked_mul(s, a.scale());
                return s;
            },
        },
        key);
}

ScaledOrthogonalMatrix build_integer_matrix(const SchemeKey& key) {
    validate(key);
    return std::visit(
        Overloaded{
            [](const Scheme1Key&) -> ScaledOrthogonalMatrix {
                throw std::invalid_argument("scheme 1 has a floating-point matrix");
            },
            [](const Scheme2Key& k) { return instantiate_array(k.array); },
            [](const Scheme3Key& k) {
                std::vector<ScaledOrthogonalMatrix> level;
                for (const auto& [a, m] : k.pairs)
                    level.push_back(blow_up(instantiate_array(a), instantiate_array(m)));
                while (level.size() > 1) {
                    std::vector<ScaledOrthogonalMatrix> next;
                    for (std::size_t i = 0; i < level.size(); i += 2)
                        next.push_back(blow_up(level[i], level[i + 1]));
                    level = std::move(next);
                }
                return level.front();
            },
            [](const Scheme4Key& k) {
                const ScaledOrthogonalMatrix h = hadamard_as_scaled(k.hadamard_exponent);
                const ScaledOrthogonalMatrix ha = tensor(h, instantiate_array(k.a));
                const ScaledOrthogonalMatrix hb = tensor(h, instantiate_array(k.b));
                return blow_up(ha, hb);
            },
            [](const Scheme5Key& k) {
                ScaledOrthogonalMatrix m = instantiate_array(k.arrays.front());
                for (std::size_t i = 1; i < k.arrays.size(); ++i)
                    m = tensor(m, instantiate_array(k.arrays[i]));
                return m;
            },
        },
        key);
}

RealMatrix build_dct_matrix(const Scheme1Key& key) {
    validate_scheme1(key);
    const std::size_t n = key.dct_size;
    const RealMatrix c = dct_matrix(n);
    // (C·D·P)[r][j] = C[r][i]·d_i where permutation[i] = j.
    RealMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i)
            out(r, key.permutation[i]) = c(r, i) * key.diagonal[i].get_d();
    return out;
}

EncryptionMatrix build_matrix(const SchemeKey& key) {
    if (const auto* k1 = std::get_if<Scheme1Key>(&key)) return build_dct_matrix(*k1);
    return build_integer_matrix(key);
}

std::size_t CiphertextStream::block_count() const {
    return std::visit([](const auto& b) { return b.size(); }, blocks);
}

const std::vector<IntVector>& CiphertextStream::integer_blocks() const {
    if (const auto* b = std::get_if<std::vector<IntVector>>(&blocks)) return *b;
    throw std::invalid_argument("ciphertext carries floating-point blocks");
}

const std::vector<RealVector>& CiphertextStream::real_blocks() const {
    if (const auto* b = std::get_if<std::vector<RealVector>>(&blocks)) return *b;
    throw std::invalid_argument("ciphertext carries integer blocks");
}

MessageBlocks text_to_blocks(std::string_view message, std::size_t half_block) {
    if (message.empty()) throw std::invalid_argument("message must be nonempty");
    if (half_block == 0) throw std::invalid_argument("block half-size must be positive");
    MessageBlocks out;
    out.message_length = message.size();
    for (std::size_t start = 0; start < message.size(); start += half_block) {
        IntVector block(half_block, 0);
        for (std::size_t i = 0; i < half_block && start + i < message.size(); ++i) {
            const auto byte = static_cast<unsigned char>(message[start + i]);
            if (byte > 127) throw std::invalid_argument("message contains a non-ASCII byte");
            block[i] = byte;
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

Cipher::Cipher(SchemeKey key) : key_(std::move(key)), matrix_(build_matrix(key_)) {
    block_size_ = framecipher::block_size(key_);
    if (const auto* k1 = std::get_if<Scheme1Key>(&key_)) {
        for (const auto& d : k1->diagonal) inverse_diagonal_.push_back(1.0 / d.get_d());
    }
}

IntVector Cipher::encrypt_block(std::span<const Int> preimage) const {
    const auto* m = std::get_if<ScaledOrthogonalMatrix>(&matrix_);
    if (m == nullptr) throw std::invalid_argument("encrypt_block needs an integer scheme");
    return multiply(m->matrix(), preimage);
}

CiphertextStream Cipher::encode(std::string_view message, const GarbageSpec& garbage) const {
    const std::size_t half = message_band();
    MessageBlocks pre = text_to_blocks(message, half);
    std::mt19937_64 rng(garbage.seed);

    CiphertextStream out;
    out.scheme = scheme();
    out.block_size = block_size_;
    out.message_length = pre.message_length;

    if (const auto* m = std::get_if<ScaledOrthogonalMatrix>(&matrix_)) {
        std::vector<IntVector> blocks;
        blocks.reserve(pre.blocks.size());
        for (const auto& mb : pre.blocks) {
            const IntVector g = draw_garbage(rng, half, garbage.magnitude);
            blocks.push_back(multiply(m->matrix(), direct_sum(mb, g)));
        }
        out.blocks = std::move(blocks);
        return out;
    }

    const auto& cdp = std::get<RealMatrix>(matrix_);
    std::vector<RealVector> blocks;
    blocks.reserve(pre.blocks.size());
    for (const auto& mb : pre.blocks) {
        const IntVector w = direct_sum(mb, draw_garbage(rng, half, garbage.magnitude));
        RealVector wr(w.size());
        std::transform(w.begin(), w.end(), wr.begin(), [](Int x) { return static_cast<double>(x); });
        blocks.push_back(multiply(cdp, wr));
    }
    out.blocks = std::move(blocks);
    return out;
}

std::string Cipher::decode(const CiphertextStream& ciphertext) const {
    if (ciphertext.scheme != scheme() || ciphertext.block_size != block_size_)
        throw CryptoError("ciphertext was not produced by a key of this scheme and block size");
    const std::size_t half = message_band();
    if (ciphertext.message_length == 0 ||
        ciphertext.message_length > ciphertext.block_count() * half ||
        ciphertext.message_length <= (ciphertext.block_count() - 1) * half)
        throw CryptoError("ciphertext header message length is inconsistent with its blocks");

    std::string text;
    text.reserve(ciphertext.block_count() * half);
    auto append = [&](Int code) {
        if (code < 0 || code > 127)
            throw CryptoError("decoded value is not 7-bit ASCII: wrong key or corrupted ciphertext");
        text.push_back(static_cast<char>(code));
    };

    if (const auto* m = std::get_if<ScaledOrthogonalMatrix>(&matrix_)) {
        for (const auto& block : ciphertext.integer_blocks()) {
            if (block.size() != block_size_) throw CryptoError("ciphertext block has the wrong length");
            const IntVector v = transpose_multiply(m->matrix(), block);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] % m->scale() != 0)
                    throw CryptoError(
                        "block is not divisible by the key scale: wrong key or corrupted ciphertext");
            for (std::size_t i = 0; i < half; ++i) append(v[i] / m->scale());
        }
    } else {
        const auto& k1 = std::get<Scheme1Key>(key_);
        const RealMatrix c = dct_matrix(block_size_);
        for (const auto& block : ciphertext.real_blocks()) {
            if (block.size() != block_size_) throw CryptoError("ciphertext block has the wrong length");
            // w = Pᵀ·D⁻¹·Cᵀ·c
            const RealVector y = transpose_multiply(c, block);
            RealVector w(block_size_);
            for (std::size_t i = 0; i < block_size_; ++i)
                w[k1.permutation[i]] = y[i] * inverse_diagonal_[i];
            for (std::size_t i = 0; i < half; ++i) {
                const double nearest = std::round(w[i]);
                if (!(std::abs(w[i] - nearest) <= kScheme1RoundingLimit))
                    throw CryptoError("decoded value is far from an integer: wrong key");
                append(static_cast<Int>(nearest));
            }
        }
    }
    text.resize(ciphertext.message_length);
    return text;
}

CiphertextStream encode(const SchemeKey& key, std::string_view message, const GarbageSpec& garbage) {
    return Cipher(key).encode(message, garbage);
}

std::string decode(const SchemeKey& key, const CiphertextStream& ciphertext) {
    return Cipher(key).decode(ciphertext);
}

CiphertextStream scheme1_encode(const Scheme1Key& key, std::string_view message,
                                const GarbageSpec& garbage) {
    return Cipher(key).encode(message, garbage);
}

std::string scheme1_decode(const Scheme1Key& key, const CiphertextStream& ciphertext) {
    return Cipher(key).decode(ciphertext);
}

} // namespace framecipher
