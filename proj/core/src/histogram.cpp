#include "framecipher/cryptanalysis/histogram.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace framecipher {

void Histogram::add(std::string_view text) {
    for (char ch : text) {
        const auto code = static_cast<unsigned char>(ch);
        if (code >= kBins) throw std::invalid_argument("histogram input contains a non-ASCII byte");
        ++counts_[code];
    }
}

Histogram& Histogram::operator+=(const Histogram& other) {
    for (std::size_t i = 0; i < kBins; ++i) counts_[i] += other.counts_[i];
    return *this;
}

std::uint64_t Histogram::total() const noexcept {
    std::uint64_t sum = 0;
    for (auto c : counts_) sum += c;
    return sum;
}

void Histogram::write_csv(std::ostream& out) const {
    out << "ascii,count\n";
    for (std::size_t i = 0; i < kBins; ++i) out << i << ',' << counts_[i] << '\n';
}

std::string Histogram::to_csv() const {
    std::ostringstream out;
    write_csv(out);
    return out.str();
}

Histogram Histogram::from_csv(std::string_view csv) {
    constexpr std::string_view header = "ascii,count\n";
    if (csv.substr(0, header.size()) != header)
        throw std::invalid_argument("histogram CSV must start with the ascii,count header");
    csv.remove_prefix(header.size());
    Histogram h;
    std::size_t rows = 0;
    while (!csv.empty()) {
        const auto eol = csv.find('\n');
        if (eol == std::string_view::npos) throw std::invalid_argument("histogram CSV row lacks LF");
        const std::string_view line = csv.substr(0, eol);
        csv.remove_prefix(eol + 1);
        const auto comma = line.find(',');
        if (comma == std::string_view::npos) throw std::invalid_argument("malformed histogram CSV row");
        std::size_t code = 0;
        std::uint64_t count = 0;
        const auto r1 = std::from_chars(line.data(), line.data() + comma, code);
        const auto r2 = std::from_chars(line.data() + comma + 1, line.data() + line.size(), count);
        if (r1.ec != std::errc() || r2.ec != std::errc() ||
            r1.ptr != line.data() + comma || r2.ptr != line.data() + line.size() || code != rows)
            throw std::invalid_argument("malformed histogram CSV row");
        h.counts_[code] = count;
        ++rows;
    }
    if (rows != kBins) throw std::invalid_argument("histogram CSV must have 128 rows");
    return h;
}

Histogram operator+(Histogram a, const Histogram& b) { return a += b; }

Histogram ascii_frequency(std::span<const std::string> outputs) {
    Histogram h;
    for (const auto& text : outputs) h.add(text);
    return h;
}

} // namespace framecipher
