#pragma once

#include "framecipher/cryptanalysis/cpa.hpp"
#include "framecipher/scheme.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace framecipher {

inline constexpr int kFileFormatVersion = 1;

// Key, ciphertext and recovered-band files are single-line JSON documents
// terminated by LF. Key values, ciphertext entries and rationals are decimal
// strings so no consumer rounds them through a double.

[[nodiscard]] std::string serialize_key(const SchemeKey& key);
/// Throws std::invalid_argument on malformed documents or invalid keys.
[[nodiscard]] SchemeKey parse_key(std::string_view text);

[[nodiscard]] std::string serialize_ciphertext(const CiphertextStream& ciphertext);
[[nodiscard]] CiphertextStream parse_ciphertext(std::string_view text);

[[nodiscard]] std::string serialize_recovered(const RecoveredMessageBand& band);
[[nodiscard]] RecoveredMessageBand parse_recovered(std::string_view text);

/// Shortest decimal form that reads back to the same double.
[[nodiscard]] std::string format_double(double value);
[[nodiscard]] double parse_double(std::string_view text);

[[nodiscard]] std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace framecipher
