#include "framecipher/cryptanalysis/histogram.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace framecipher;

TEST(Histogram, CountsSingleLine) {
    const std::vector<std::string> lines{"AAB"};
    const Histogram h = ascii_frequency(lines);
    EXPECT_EQ(h.count(65), 2u);
    EXPECT_EQ(h.count(66), 1u);
    EXPECT_EQ(h.total(), 3u);
}

TEST(Histogram, EmptyStreamIsAllZero) {
    const Histogram h = ascii_frequency({});
    for (auto c : h.counts()) EXPECT_EQ(c, 0u);
    EXPECT_EQ(h.total(), 0u);
}

TEST(Histogram, ConcatenationIsAdditive) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> ch(0, 127);
    for (int trial = 0; trial < 50; ++trial) {
        std::string a(rng() % 40, '\0'), b(rng() % 40, '\0');
        for (char& c : a) c = static_cast<char>(ch(rng));
        for (char& c : b) c = static_cast<char>(ch(rng));
        Histogram ha, hb, hab;
        ha.add(a);
        hb.add(b);
        hab.add(a + b);
        EXPECT_EQ(hab, ha + hb);
        EXPECT_EQ(hab.total(), a.size() + b.size());
    }
}

TEST(Histogram, RejectsNonAscii) {
    Histogram h;
    EXPECT_THROW(h.add("\x80"), std::invalid_argument);
}

TEST(Histogram, CsvFormatAndRoundTrip) {
    Histogram h;
    h.add("hello\n");
    const std::string csv = h.to_csv();
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "ascii,count");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 128);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
    EXPECT_NE(csv.find("\n108,2\n"), std::string::npos);
    EXPECT_EQ(Histogram::from_csv(csv), h);
    EXPECT_THROW((void)Histogram::from_csv("ascii,count\n0,1\n"), std::invalid_argument);
}
