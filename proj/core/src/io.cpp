#include "framecipher/io.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace framecipher {

namespace {

using nlohmann::json;

json array_to_json(const HadamardArrayKey& a) {
    json values = json::array();
    for (Int v : a.values()) values.push_back(to_string(v));
    return json{{"order", a.order()}, {"values", values}};
}

HadamardArrayKey array_from_json(const json& j) {
    std::vector<Int> values;
    for (const auto& v : j.at("values")) values.push_back(parse_int(v.get<std::string>()));
    return HadamardArrayKey(j.at("order").get<std::size_t>(), std::move(values));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    q.canonicalize();
    if (q.get_str() != s) throw std::invalid_argument("rational is not in lowest terms: " + s);
    return q;
}

void require_format(const json& doc, std::string_view kind) {
    if (!doc.is_object() || doc.at("format").get<int>() != kFileFormatVersion)
        throw std::invalid_argument("unsupported " + std::string(kind) + " file format");
    if (doc.at("kind").get<std::string>() != kind)
        throw std::invalid_argument("file is not a " + std::string(kind) + " document");
}

template <class Fn>
auto parse_document(std::string_view text, Fn&& fn) {
    try {
        return fn(json::parse(text));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

} // namespace

std::string serialize_key(const SchemeKey& key) {
    validate(key);
    json doc{{"format", kFileFormatVersion}, {"kind", "key"}, {"scheme", static_cast<int>(scheme_of(key))}};
    if (const auto* k = std::get_if<Scheme1Key>(&key)) {
        json diag = json::array();
        for (const auto& d : k->diagonal) diag.push_back(rational_to_string(d));
        doc["dct_size"] = k->dct_size;
        doc["diagonal"] = diag;
        doc["permutation"] = k->permutation;
    } else if (const auto* k2 = std::get_if<Scheme2Key>(&key)) {
        doc["array"] = array_to_json(k2->array);
    } else if (const auto* k3 = std::get_if<Scheme3Key>(&key)) {
        json pairs = json::array();
        for (const auto& [a, m] : k3->pairs) pairs.push_back(json::array({array_to_json(a), array_to_json(m)}));
        doc["pairs"] = pairs;
    } else if (const auto* k4 = std::get_if<Scheme4Key>(&key)) {
        doc["hadamard_exponent"] = k4->hadamard_exponent;
        doc["a"] = array_to_json(k4->a);
        doc["b"] = array_to_json(k4->b);
    } else {
        json arrays = json::array();
        for (const auto& a : std::get<Scheme5Key>(key).arrays) arrays.push_back(array_to_json(a));
        doc["arrays"] = arrays;
    }
    return doc.dump() + "\n";
}

SchemeKey parse_key(std::string_view text) {
    return parse_document(text, [](const json& doc) -> SchemeKey {
        require_format(doc, "key");
        SchemeKey key = [&]() -> SchemeKey {
            switch (scheme_from_int(doc.at("scheme").get<int>())) {
            case SchemeId::Dct: {
                Scheme1Key k;
                k.dct_size = doc.at("dct_size").get<std::size_t>();
                for (const auto& d : doc.at("diagonal"))
                    k.diagonal.push_back(rational_from_string(d.get<std::string>()));
                k.permutation = doc.at("permutation").get<std::vector<std::size_t>>();
                return k;
            }
            case SchemeId::HadamardArray:
                return Scheme2Key{array_from_json(doc.at("array"))};
            case SchemeId::BlowUp: {
                Scheme3Key k;
                for (const auto& p : doc.at("pairs")) {
                    if (p.size() != 2) throw std::invalid_argument("scheme 3 pairs need two arrays");
                    k.pairs.emplace_back(array_from_json(p.at(0)), array_from_json(p.at(1)));
                }
                if (k.pairs.empty()) throw std::invalid_argument("scheme 3 key has no pairs");
                return k;
            }
            case SchemeId::HadamardTensor:
                return Scheme4Key{doc.at("hadamard_exponent").get<unsigned>(), array_from_json(doc.at("a")),
                                  array_from_json(doc.at("b"))};
            case SchemeId::TensorChain: {
                Scheme5Key k;
                for (const auto& a : doc.at("arrays")) k.arrays.push_back(array_from_json(a));
                return k;
            }
            }
            throw std::invalid_argument("unknown scheme");
        }();
        validate(key);
        return key;
    });
}

std::string serialize_ciphertext(const CiphertextStream& ciphertext) {
    json blocks = json::array();
    if (const auto* ib = std::get_if<std::vector<IntVector>>(&ciphertext.blocks)) {
        for (const auto& b : *ib) {
            json row = json::array();
            for (Int x : b) row.push_back(to_string(x));
            blocks.push_back(row);
        }
    } else {
        for (const auto& b : ciphertext.real_blocks()) {
            json row = json::array();
            for (double x : b) row.push_back(format_double(x));
            blocks.push_back(row);
        }
    }
    json doc{{"format", kFileFormatVersion},
             {"kind", "ciphertext"},
             {"scheme", static_cast<int>(ciphertext.scheme)},
             {"block_size", ciphertext.block_size},
             {"message_length", ciphertext.message_length},
             {"blocks", blocks}};
    return doc.dump() + "\n";
}

CiphertextStream parse_ciphertext(std::string_view text) {
    return parse_document(text, [](const json& doc) {
        require_format(doc, "ciphertext");
        CiphertextStream c;
        c.scheme = scheme_from_int(doc.at("scheme").get<int>());
        c.block_size = doc.at("block_size").get<std::size_t>();
        c.message_length = doc.at("message_length").get<std::size_t>();
        if (c.block_size == 0 || c.block_size % 2 != 0)
            throw std::invalid_argument("ciphertext block size must be positive and even");
        if (c.scheme == SchemeId::Dct) {
            std::vector<RealVector> blocks;
            for (const auto& row : doc.at("blocks")) {
                RealVector b;
                for (const auto& x : row) b.push_back(parse_double(x.get<std::string>()));
                if (b.size() != c.block_size) throw std::invalid_argument("ciphertext block has the wrong length");
                blocks.push_back(std::move(b));
            }
            c.blocks = std::move(blocks);
        } else {
            std::vector<IntVector> blocks;
            for (const auto& row : doc.at("blocks")) {
                IntVector b;
                for (const auto& x : row) b.push_back(parse_int(x.get<std::string>()));
                if (b.size() != c.block_size) throw std::invalid_argument("ciphertext block has the wrong length");
                blocks.push_back(std::move(b));
            }
            c.blocks = std::move(blocks);
        }
        return c;
    });
}

std::string serialize_recovered(const RecoveredMessageBand& band) {
    const RationalMatrix& a = band.analysis();
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(rational_to_string(a(r, c)));
        rows.push_back(row);
    }
    json doc{{"format", kFileFormatVersion},
             {"kind", "message_band"},
             {"rows", a.rows()},
             {"cols", a.cols()},
             {"scale", rational_to_string(band.scale())},
             {"analysis", rows}};
    return doc.dump() + "\n";
}

RecoveredMessageBand parse_recovered(std::string_view text) {
    return parse_document(text, [](const json& doc) {
        require_format(doc, "message_band");
        RationalMatrix a(doc.at("rows").get<std::size_t>(), doc.at("cols").get<std::size_t>());
        const auto& rows = doc.at("analysis");
        if (rows.size() != a.rows()) throw std::invalid_argument("message band row count mismatch");
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (rows[r].size() != a.cols()) throw std::invalid_argument("message band column count mismatch");
            for (std::size_t c = 0; c < a.cols(); ++c)
                a(r, c) = rational_from_string(rows[r][c].get<std::string>());
        }
        return RecoveredMessageBand(std::move(a), rational_from_string(doc.at("scale").get<std::string>()));
    });
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
        throw std::invalid_argument("malformed decimal number: " + std::string(text));
    return value;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write " + path.string());
    out << contents;
    if (!out) throw std::invalid_argument("failed writing " + path.string());
}

} // namespace framecipher
