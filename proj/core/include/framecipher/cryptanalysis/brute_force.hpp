#pragma once

#include "framecipher/cryptanalysis/histogram.hpp"
#include "framecipher/scheme.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace framecipher {

struct VariableRange {
    Int min = 0;
    Int max = 0;
};

/**
 * Exhaustive key search over a scheme-5 ciphertext.
 *
 * Variables are the array values in key order (array 0's values first). The
 * guess space is enumerated as an odometer with variable 0 turning fastest.
 */
struct BruteForceConfig {
    std::vector<std::size_t> orders;
    std::vector<VariableRange> ranges;  // one per variable
    std::size_t parallelism = 1;
    std::uint64_t budget_cap = 50'000'000;

    /// Same [min, max] for every variable.
    [[nodiscard]] static BruteForceConfig uniform(std::vector<std::size_t> orders, Int min, Int max);
    /// Every key entry and entry ± offset (the ±1 experiment protocol).
    [[nodiscard]] static BruteForceConfig around(const Scheme5Key& key, Int offset);

    [[nodiscard]] std::size_t variable_count() const;
};

struct GuessOutcome {
    std::uint64_t index = 0;
    std::vector<Int> guess;
    std::string text;
};

using GuessSink = std::function<void(const GuessOutcome&)>;

struct BruteForceSummary {
    std::uint64_t guesses = 0;  // assignments enumerated
    std::uint64_t skipped = 0;  // assignments with an all-zero array
    Histogram histogram;        // over every emitted text
};

/// Product of the range widths. Throws std::invalid_argument above the budget cap.
[[nodiscard]] std::uint64_t guess_space_size(const BruteForceConfig& config);

/// Assignment number `index` in odometer order.
[[nodiscard]] std::vector<Int> guess_at(const BruteForceConfig& config, std::uint64_t index);

/// Applies (1/k̃)·M̃ᵀ to every block in floating point, rounds and clamps the
/// message half to 0..127. Empty when some array of the guess is all zero.
[[nodiscard]] std::optional<std::string> decode_with_guess(std::span<const std::size_t> orders,
                                                           std::span<const Int> guess,
                                                           const CiphertextStream& ciphertext);

/// Enumerates every assignment, calling sink in guess-index order regardless
/// of which worker finished first. Histograms from workers are summed.
BruteForceSummary brute_force_search(const CiphertextStream& ciphertext,
                                     const BruteForceConfig& config, const GuessSink& sink = {});

/// Transcript line: comma-separated guess, TAB, decoded text with control
/// characters and backslashes escaped. No trailing newline.
[[nodiscard]] std::string format_transcript_line(std::span<const Int> guess, std::string_view text);

struct TranscriptLine {
    std::vector<Int> guess;
    std::string text;
};

/// Inverse of format_transcript_line. Throws std::invalid_argument on malformed lines.
[[nodiscard]] TranscriptLine parse_transcript_line(std::string_view line);

[[nodiscard]] std::string escape_text(std::string_view text);
[[nodiscard]] std::string unescape_text(std::string_view text);

} // namespace framecipher
