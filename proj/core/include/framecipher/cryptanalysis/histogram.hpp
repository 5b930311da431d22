#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace framecipher {

/// Occurrence counts of the 128 ASCII codes.
class Histogram {
public:
    static constexpr std::size_t kBins = 128;

    /// Counts every byte of text. Bytes above 127 are rejected with std::invalid_argument.
    void add(std::string_view text);

    Histogram& operator+=(const Histogram& other);

    [[nodiscard]] std::uint64_t count(std::size_t code) const { return counts_.at(code); }
    [[nodiscard]] std::uint64_t total() const noexcept;
    [[nodiscard]] const std::array<std::uint64_t, kBins>& counts() const noexcept { return counts_; }

    /// `ascii,count` header followed by 128 rows, LF line endings.
    void write_csv(std::ostream& out) const;
    [[nodiscard]] std::string to_csv() const;
    /// Inverse of write_csv. Throws std::invalid_argument on malformed input.
    [[nodiscard]] static Histogram from_csv(std::string_view csv);

    friend bool operator==(const Histogram&, const Histogram&) = default;

private:
    std::array<std::uint64_t, kBins> counts_{};
};

[[nodiscard]] Histogram operator+(Histogram a, const Histogram& b);

/// Histogram of every character across the given decoded texts.
[[nodiscard]] Histogram ascii_frequency(std::span<const std::string> outputs);

} // namespace framecipher
