#include "framecipher/cryptanalysis/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace framecipher {

namespace {

constexpr std::uint64_t kChunkPerWorker = 4096;

struct WorkerOutput {
    std::vector<GuessOutcome> outcomes;
    Histogram histogram;
    std::uint64_t skipped = 0;
};

void require_scheme5_shape(const CiphertextStream& ciphertext, std::span<const std::size_t> orders) {
    if (ciphertext.scheme != SchemeId::TensorChain)
        throw std::invalid_argument("brute force search targets scheme-5 ciphertexts");
    std::size_t n = 1;
    for (std::size_t o : orders) {
        if (!is_supported_array_order(o)) throw std::invalid_argument("unsupported array order");
        n *= o;
    }
    if (orders.empty() || n != ciphertext.block_size)
        throw std::invalid_argument("array orders do not match the ciphertext block size");
}

} // namespace

BruteForceConfig BruteForceConfig::uniform(std::vector<std::size_t> orders, Int min, Int max) {
    BruteForceConfig cfg;
    cfg.orders = std::move(orders);
    std::size_t count = 0;
    for (std::size_t o : cfg.orders) count += o;
    cfg.ranges.assign(count, VariableRange{min, max});
    return cfg;
}

BruteForceConfig BruteForceConfig::around(const Scheme5Key& key, Int offset) {
    if (offset < 0) throw std::invalid_argument("guess offset must be nonnegative");
    BruteForceConfig cfg;
    for (const auto& a : key.arrays) {
        cfg.orders.push_back(a.order());
        for (Int v : a.values())
            cfg.ranges.push_back({checked_sub(v, offset), checked_add(v, offset)});
    }
    return cfg;
}

std::size_t BruteForceConfig::variable_count() const {
    std::size_t n = 0;
    for (std::size_t o : orders) n += o;
    return n;
}

std::uint64_t guess_space_size(const BruteForceConfig& config) {
    if (config.ranges.size() != config.variable_count())
        throw std::invalid_argument("brute force needs one range per key variable");
    std::uint64_t total = 1;
    for (const auto& r : config.ranges) {
        if (r.max < r.min) throw std::invalid_argument("guess range is empty");
        const Int width = checked_add(checked_sub(r.max, r.min), 1);
        if (width > static_cast<Int>(config.budget_cap) ||
            static_cast<Int>(total) * width > static_cast<Int>(config.budget_cap))
            throw std::invalid_argument("guess space exceeds the configured budget cap");
        total *= static_cast<std::uint64_t>(width);
    }
    return total;
}

std::vector<Int> guess_at(const BruteForceConfig& config, std::uint64_t index) {
    std::vector<Int> guess(config.ranges.size());
    for (std::size_t v = 0; v < config.ranges.size(); ++v) {
        const auto width = static_cast<std::uint64_t>(config.ranges[v].max - config.ranges[v].min + 1);
        guess[v] = config.ranges[v].min + static_cast<Int>(index % width);
        index /= width;
    }
    if (index != 0) throw std::out_of_range("guess index beyond the guess space");
    return guess;
}

std::optional<std::string> decode_with_guess(std::span<const std::size_t> orders,
                                             std::span<const Int> guess,
                                             const CiphertextStream& ciphertext) {
    RealMatrix m = RealMatrix::identity(1);
    double k = 1.0;
    std::size_t offset = 0;
    for (std::size_t order : orders) {
        const auto values = guess.subspan(offset, order);
        offset += order;
        double array_scale = 0.0;
        for (Int v : values) array_scale += static_cast<double>(v) * static_cast<double>(v);
        if (array_scale == 0.0) return std::nullopt;
        k *= array_scale;
        m = tensor(m, RealMatrix(instantiate_array_unchecked(order, values)));
    }

    const std::size_t half = ciphertext.block_size / 2;
    std::string text;
    text.reserve(ciphertext.block_count() * half);
    RealVector block(ciphertext.block_size);
    for (const auto& c : ciphertext.integer_blocks()) {
        std::transform(c.begin(), c.end(), block.begin(), [](Int x) { return static_cast<double>(x); });
        const RealVector w = transpose_multiply(m, block);
        for (std::size_t i = 0; i < half; ++i) {
            const double code = std::clamp(std::round(w[i] / k), 0.0, 127.0);
            text.push_back(static_cast<char>(static_cast<int>(code)));
        }
    }
    text.resize(std::min(text.size(), ciphertext.message_length));
    return text;
}

BruteForceSummary brute_force_search(const CiphertextStream& ciphertext,
                                     const BruteForceConfig& config, const GuessSink& sink) {
    require_scheme5_shape(ciphertext, config.orders);
    const std::uint64_t total = guess_space_size(config);
    const std::size_t workers = std::max<std::size_t>(1, config.parallelism);

    BruteForceSummary summary;
    summary.guesses = total;

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, WorkerOutput& out) {
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            std::vector<Int> guess = guess_at(config, idx);
            auto text = decode_with_guess(config.orders, guess, ciphertext);
            if (!text) {
                ++out.skipped;
                continue;
            }
            out.histogram.add(*text);
            if (sink) out.outcomes.push_back({idx, std::move(guess), *std::move(text)});
        }
    };

    const std::uint64_t chunk = kChunkPerWorker * workers;
    for (std::uint64_t start = 0; start < total; start += chunk) {
        const std::uint64_t stop = std::min(total, start + chunk);
        const std::uint64_t span = stop - start;
        std::vector<WorkerOutput> outputs(workers);
        {
            std::vector<std::jthread> threads;
            for (std::size_t w = 0; w < workers; ++w) {
                const std::uint64_t b = start + span * w / workers;
                const std::uint64_t e = start + span * (w + 1) / workers;
                if (b == e) continue;
                threads.emplace_back([&, b, e, w] { run_range(b, e, outputs[w]); });
            }
        }
        for (auto& out : outputs) {
            summary.histogram += out.histogram;
            summary.skipped += out.skipped;
            if (sink)
                for (const auto& outcome : out.outcomes) sink(outcome);
        }
    }
    if (summary.skipped > 0)
        std::fprintf(stderr, "brute force: skipped %llu assignments with an all-zero array\n",
                     static_cast<unsigned long long>(summary.skipped));
    return summary;
}

std::string escape_text(std::string_view text) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(text.size());
    for (char ch : text) {
        const auto code = static_cast<unsigned char>(ch);
        switch (ch) {
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (code < 0x20 || code >= 0x7f) {
                out += "\\x";
                out.push_back(kHex[code >> 4]);
                out.push_back(kHex[code & 0xf]);
            } else {
                out.push_back(ch);
            }
        }
    }
    return out;
}

std::string unescape_text(std::string_view text) {
    auto hex_value = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw std::invalid_argument("bad hex digit in escaped text");
    };
    std::string out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            out.push_back(text[i]);
            continue;
        }
        if (++i == text.size()) throw std::invalid_argument("dangling escape in text");
        switch (text[i]) {
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        case 'x':
            if (i + 2 >= text.size())
                throw std::invalid_argument("truncated hex escape");
            out.push_back(static_cast<char>(hex_value(text[i + 1]) * 16 + hex_value(text[i + 2])));
            i += 2;
            break;
        default: throw std::invalid_argument("unknown escape in text");
        }
    }
    return out;
}

std::string format_transcript_line(std::span<const Int> guess, std::string_view text) {
    std::string line;
    for (std::size_t i = 0; i < guess.size(); ++i) {
        if (i > 0) line.push_back(',');
        line += to_string(guess[i]);
    }
    line.push_back('\t');
    line += escape_text(text);
    return line;
}

TranscriptLine parse_transcript_line(std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw std::invalid_argument("transcript line lacks a TAB");
    TranscriptLine out;
    std::string_view guesses = line.substr(0, tab);
    while (!guesses.empty()) {
        const auto comma = guesses.find(',');
        out.guess.push_back(parse_int(guesses.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        guesses.remove_prefix(comma + 1);
    }
    out.text = unescape_text(line.substr(tab + 1));
    return out;
}

} // namespace framecipher
