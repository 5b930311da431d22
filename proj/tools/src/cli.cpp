#include "framecipher_cli/cli.hpp"

#include "framecipher/cryptanalysis/brute_force.hpp"
#include "framecipher/cryptanalysis/cpa.hpp"
#include "framecipher/cryptanalysis/histogram.hpp"
#include "framecipher/cryptanalysis/perturbation.hpp"
#include "framecipher/error.hpp"
#include "framecipher/io.hpp"
#include "framecipher/scheme.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace framecipher::cli {

namespace {

namespace fs = std::filesystem;

void emit(const std::string& path, std::string_view contents, std::ostream& out) {
    if (path.empty() || path == "-")
        out << contents;
    else
        write_file(path, contents);
}

std::string message_input(const std::string& text, const std::string& path) {
    if (!path.empty()) return read_file(path);
    return text;
}

std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (std::uint64_t{words[0]} << 32) | words[1];
}

Int require_garbage(long long g) {
    if (g < 1) throw std::invalid_argument("--garbage must be at least 1");
    return g;
}

// Applies fn to every array of an integer-scheme key, keeping the structure.
SchemeKey map_arrays(const SchemeKey& key, const std::function<HadamardArrayKey(const HadamardArrayKey&)>& fn) {
    return std::visit(
        [&](const auto& k) -> SchemeKey {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Scheme1Key>) {
                throw std::invalid_argument("scheme 1 keys have no Hadamard arrays");
            } else if constexpr (std::is_same_v<K, Scheme2Key>) {
                return Scheme2Key{fn(k.array)};
            } else if constexpr (std::is_same_v<K, Scheme3Key>) {
                Scheme3Key out;
                for (const auto& [a, m] : k.pairs) out.pairs.emplace_back(fn(a), fn(m));
                return out;
            } else if constexpr (std::is_same_v<K, Scheme4Key>) {
                return Scheme4Key{k.hadamard_exponent, fn(k.a), fn(k.b)};
            } else {
                Scheme5Key out;
                for (const auto& a : k.arrays) out.arrays.push_back(fn(a));
                return out;
            }
        },
        key);
}

struct KeygenArgs {
    int scheme = 5;
    std::vector<std::size_t> orders;
    unsigned exponent = 2;
    std::size_t dct_size = 16;
    std::vector<long long> range{1, 10};
    std::uint64_t seed = 0;
    std::string output;
};

int run_keygen(const KeygenArgs& a, std::ostream& out) {
    KeygenParams p;
    p.scheme = scheme_from_int(a.scheme);
    p.orders = a.orders;
    if (p.orders.empty()) {
        if (p.scheme == SchemeId::BlowUp) p.orders = {4, 4};
        if (p.scheme == SchemeId::HadamardTensor) p.orders = {4, 4};
        if (p.scheme == SchemeId::TensorChain) p.orders = {4, 4};
    }
    p.hadamard_exponent = a.exponent;
    p.dct_size = a.dct_size;
    p.value_min = a.range.at(0);
    p.value_max = a.range.at(1);
    p.seed = a.seed;
    emit(a.output, serialize_key(keygen(p)), out);
    return kExitOk;
}

struct EncodeArgs {
    std::string key;
    std::string text;
    std::string input;
    long long garbage = 128;
    std::uint64_t seed = 0;
    std::string output;
};

int run_encode(const EncodeArgs& a, std::ostream& out) {
    const SchemeKey key = parse_key(read_file(a.key));
    const std::string message = message_input(a.text, a.input);
    const CiphertextStream c = encode(key, message, GarbageSpec{require_garbage(a.garbage), a.seed});
    emit(a.output, serialize_ciphertext(c), out);
    return kExitOk;
}

struct DecodeArgs {
    std::string key;
    std::string input;
    std::string output;
};

int run_decode(const DecodeArgs& a, std::ostream& out) {
    const SchemeKey key = parse_key(read_file(a.key));
    const CiphertextStream c = parse_ciphertext(read_file(a.input));
    emit(a.output, decode(key, c), out);
    return kExitOk;
}

struct BruteForceArgs {
    std::string input;
    std::vector<std::size_t> orders;
    std::vector<long long> range;
    std::string around;
    long long offset = 1;
    std::size_t threads = 1;
    std::uint64_t budget = 50'000'000;
    std::string transcript;
    std::string histogram;
};

BruteForceConfig make_bruteforce_config(const BruteForceArgs& a) {
    BruteForceConfig cfg;
    if (!a.around.empty()) {
        const SchemeKey key = parse_key(read_file(a.around));
        const auto* k5 = std::get_if<Scheme5Key>(&key);
        if (k5 == nullptr) throw std::invalid_argument("--around needs a scheme 5 key");
        if (a.offset < 0) throw std::invalid_argument("--offset must be nonnegative");
        cfg = BruteForceConfig::around(*k5, a.offset);
    } else {
        if (a.orders.empty() || a.range.size() != 2)
            throw std::invalid_argument("give either --around or both --orders and --range");
        cfg = BruteForceConfig::uniform(a.orders, a.range[0], a.range[1]);
    }
    cfg.parallelism = a.threads;
    cfg.budget_cap = a.budget;
    return cfg;
}

// Streams transcript lines to a file or to out.
class TranscriptWriter {
public:
    TranscriptWriter(const std::string& path, std::ostream& fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) throw std::invalid_argument("cannot write " + path);
            stream_ = &file_;
        } else {
            stream_ = &fallback;
        }
    }

    void write(const GuessOutcome& o) { *stream_ << format_transcript_line(o.guess, o.text) << '\n'; }

    void finish() {
        stream_->flush();
        if (!*stream_) throw std::runtime_error("failed writing transcript");
    }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

int run_bruteforce(const BruteForceArgs& a, std::ostream& out, std::ostream& err) {
    const CiphertextStream c = parse_ciphertext(read_file(a.input));
    const BruteForceConfig cfg = make_bruteforce_config(a);
    TranscriptWriter writer(a.transcript, out);
    const BruteForceSummary summary =
        brute_force_search(c, cfg, [&](const GuessOutcome& o) { writer.write(o); });
    writer.finish();
    if (!a.histogram.empty()) write_file(a.histogram, summary.histogram.to_csv());
    err << "guesses " << summary.guesses << ", skipped " << summary.skipped << '\n';
    return kExitOk;
}

struct AnalyzeArgs {
    std::string transcript;
    std::string output;
};

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
    std::istringstream in(read_file(a.transcript));
    Histogram h;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        h.add(parse_transcript_line(line).text);
    }
    emit(a.output, h.to_csv(), out);
    return kExitOk;
}

struct CpaArgs {
    std::string oracle_key;
    std::size_t blocks = 64;
    long long garbage = 128;
    std::uint64_t seed = 0;
    bool random_plaintexts = false;
    std::string output;
};

int run_cpa(const CpaArgs& a, std::ostream& out) {
    KeyedOracle oracle(parse_key(read_file(a.oracle_key)), require_garbage(a.garbage), derived_seed(a.seed, 1));
    CpaOptions options;
    options.basis_plaintexts = !a.random_plaintexts;
    options.seed = derived_seed(a.seed, 2);
    const std::size_t nm = oracle.message_band();
    const std::size_t nn = oracle.noise_band();
    const CpaResult result = cpa_attack(oracle, nm, nn, options);
    const RecoveredMessageBand& band = result.message_band;

    const RationalMatrix& theta = band.analysis();
    RationalMatrix expected_gram(nm, nm);
    for (std::size_t i = 0; i < nm; ++i) expected_gram(i, i) = band.scale();
    const bool parseval = theta.transpose() * theta == expected_gram;

    std::mt19937_64 rng(derived_seed(a.seed, 3));
    std::uniform_int_distribution<int> ascii(0, 127);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < a.blocks; ++i) {
        std::string plaintext(nm, '\0');
        for (char& ch : plaintext) ch = static_cast<char>(ascii(rng));
        if (band.decode(oracle.encrypt(plaintext)) == plaintext) ++matched;
    }

    if (!a.output.empty()) write_file(a.output, serialize_recovered(band));
    out << "message_band " << nm << '\n'
        << "noise_band " << nn << '\n'
        << "scale " << band.scale().get_str() << '\n'
        << "step1_calls " << result.step1_calls << '\n'
        << "step2_calls " << result.step2_calls << '\n'
        << "parseval " << (parseval ? "yes" : "no") << '\n'
        << "verified_blocks " << matched << '/' << a.blocks << '\n';
    return parseval && matched == a.blocks ? kExitOk : kExitCrypto;
}

struct PerturbArgs {
    std::string key;
    long long offset = 1;
    long long garbage = 128;
    std::string text = "A";
    std::uint64_t seed = 0;
    std::string output;
};

int run_perturb(const PerturbArgs& a, std::ostream& out) {
    if (a.offset < 0) throw std::invalid_argument("--offset must be nonnegative");
    const SchemeKey key = parse_key(read_file(a.key));
    if (scheme_of(key) == SchemeId::Dct) throw std::invalid_argument("perturb needs an integer scheme key");
    const Cipher cipher(key);
    const auto& m = std::get<ScaledOrthogonalMatrix>(cipher.matrix());

    std::mt19937_64 rng(a.seed);
    std::uniform_int_distribution<long long> step(-a.offset, a.offset);
    const SchemeKey guess = map_arrays(key, [&](const HadamardArrayKey& arr) {
        for (;;) {
            std::vector<Int> values(arr.values().begin(), arr.values().end());
            for (Int& v : values) v = checked_add(v, step(rng));
            bool nonzero = false;
            for (Int v : values) nonzero = nonzero || v != 0;
            if (nonzero) return HadamardArrayKey(arr.order(), std::move(values));
        }
    });
    const IntMatrix p = build_integer_matrix(guess).matrix() - m.matrix();

    const MessageBlocks blocks = text_to_blocks(a.text, cipher.message_band());
    IntVector w = blocks.blocks.front();
    const IntVector g = draw_garbage(rng, cipher.block_size() - cipher.message_band(), require_garbage(a.garbage));
    w.insert(w.end(), g.begin(), g.end());

    const PerturbationReport r = perturbed_decode(m, p, w);
    double mean_dev = 0.0;
    for (double c : r.coefficient_diag) mean_dev += std::abs(1.0 - c);
    mean_dev /= static_cast<double>(r.coefficient_diag.size());
    double message_err = 0.0;
    for (std::size_t j = 0; j < cipher.message_band(); ++j)
        message_err = std::max(message_err, std::abs(r.w_tilde_direct[j] - static_cast<double>(w[j])));

    out << std::setprecision(17) << "scale " << to_string(m.scale()) << '\n'
        << "k_tilde " << r.k_tilde << '\n'
        << "mean_diagonal_deviation " << mean_dev << '\n'
        << "max_message_error " << message_err << '\n'
        << "relative_discrepancy " << r.relative_discrepancy() << '\n';
    if (!a.output.empty()) {
        std::ostringstream csv;
        csv << std::setprecision(17) << "j,w,w_tilde,coefficient,cross_term\n";
        for (std::size_t j = 0; j < w.size(); ++j)
            csv << j << ',' << to_string(w[j]) << ',' << r.w_tilde_direct[j] << ',' << r.coefficient_diag[j]
                << ',' << r.cross_terms[j] << '\n';
        write_file(a.output, csv.str());
    }
    return kExitOk;
}

struct ExperimentArgs {
    std::vector<long long> key_range;
    long long garbage = 128;
    std::string text;
    std::string input;
    std::vector<std::size_t> orders{4, 4};
    long long offset = 1;
    std::uint64_t seed = 0;
    std::size_t threads = 4;
    std::uint64_t budget = 50'000'000;
    std::string out_dir = ".";
};

int run_experiment(const ExperimentArgs& a, std::ostream& out) {
    const std::string message = message_input(a.text, a.input);
    if (a.offset < 0) throw std::invalid_argument("--offset must be nonnegative");

    KeygenParams kp;
    kp.scheme = SchemeId::TensorChain;
    kp.orders = a.orders;
    kp.value_min = a.key_range.at(0);
    kp.value_max = a.key_range.at(1);
    kp.seed = derived_seed(a.seed, 1);
    const SchemeKey key = keygen(kp);
    const CiphertextStream c = encode(key, message, GarbageSpec{require_garbage(a.garbage), derived_seed(a.seed, 2)});

    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    write_file(dir / "key.json", serialize_key(key));
    write_file(dir / "ciphertext.json", serialize_ciphertext(c));

    BruteForceConfig cfg = BruteForceConfig::around(std::get<Scheme5Key>(key), a.offset);
    cfg.parallelism = a.threads;
    cfg.budget_cap = a.budget;

    std::vector<Int> truth;
    for (const auto& arr : std::get<Scheme5Key>(key).arrays) truth.insert(truth.end(), arr.values().begin(), arr.values().end());

    bool true_key_decodes = false;
    std::uint64_t exact_matches = 0;
    TranscriptWriter writer((dir / "transcript.tsv").string(), out);
    const BruteForceSummary summary = brute_force_search(c, cfg, [&](const GuessOutcome& o) {
        writer.write(o);
        if (o.text == message) {
            ++exact_matches;
            if (o.guess == truth) true_key_decodes = true;
        }
    });
    writer.finish();
    write_file(dir / "histogram.csv", summary.histogram.to_csv());

    out << "guesses " << summary.guesses << '\n'
        << "skipped " << summary.skipped << '\n'
        << "exact_plaintext_lines " << exact_matches << '\n'
        << "true_key_decodes " << (true_key_decodes ? "yes" : "no") << '\n'
        << "histogram " << (dir / "histogram.csv").string() << '\n';
    return true_key_decodes ? kExitOk : kExitCrypto;
}

void add_range(CLI::App* cmd, const std::string& name, std::vector<long long>& target, const std::string& help) {
    cmd->add_option(name, target, help)->expected(2);
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Frame-based cipher toolkit: key generation, encryption and attacks"};
    app.name("framecipher");
    app.require_subcommand(1);

    KeygenArgs keygen_args;
    auto* kg = app.add_subcommand("keygen", "Generate a random key");
    kg->add_option("--scheme", keygen_args.scheme, "Scheme number 1-5")->check(CLI::Range(1, 5));
    kg->add_option("--orders", keygen_args.orders, "Array orders (schemes 3-5)")->delimiter(',');
    kg->add_option("--exponent", keygen_args.exponent, "Sylvester exponent p (scheme 4)");
    kg->add_option("--dct-size", keygen_args.dct_size, "DCT size (scheme 1)");
    add_range(kg, "--range", keygen_args.range, "Value range lo hi");
    kg->add_option("--seed", keygen_args.seed);
    kg->add_option("-o,--output", keygen_args.output, "Key file (stdout if omitted)");

    EncodeArgs encode_args;
    auto* en = app.add_subcommand("encode", "Encrypt a message");
    en->add_option("--key", encode_args.key)->required();
    auto* en_text = en->add_option("--text", encode_args.text);
    auto* en_in = en->add_option("--in", encode_args.input, "Plaintext file");
    en_text->excludes(en_in);
    en->add_option("--garbage", encode_args.garbage, "Garbage magnitude G");
    en->add_option("--seed", encode_args.seed);
    en->add_option("-o,--output", encode_args.output);

    DecodeArgs decode_args;
    auto* de = app.add_subcommand("decode", "Decrypt a ciphertext file");
    de->add_option("--key", decode_args.key)->required();
    de->add_option("--in", decode_args.input, "Ciphertext file")->required();
    de->add_option("-o,--output", decode_args.output);

    BruteForceArgs bf_args;
    auto* bf = app.add_subcommand("bruteforce", "Exhaustive key search on a scheme 5 ciphertext");
    bf->add_option("--in", bf_args.input, "Ciphertext file")->required();
    bf->add_option("--orders", bf_args.orders)->delimiter(',');
    add_range(bf, "--range", bf_args.range, "Guess range lo hi for every variable");
    bf->add_option("--around", bf_args.around, "Key file; guesses each entry and entry +- offset");
    bf->add_option("--offset", bf_args.offset);
    bf->add_option("--threads", bf_args.threads)->check(CLI::PositiveNumber);
    bf->add_option("--budget", bf_args.budget, "Largest guess count allowed");
    bf->add_option("--transcript", bf_args.transcript, "Transcript file (stdout if omitted)");
    bf->add_option("--histogram", bf_args.histogram, "Histogram CSV file");

    AnalyzeArgs an_args;
    auto* an = app.add_subcommand("analyze", "ASCII histogram of a brute-force transcript");
    an->add_option("--transcript", an_args.transcript)->required();
    an->add_option("-o,--output", an_args.output);

    CpaArgs cpa_args;
    auto* cp = app.add_subcommand("cpa", "Chosen-plaintext attack against a keyed oracle");
    cp->add_option("--oracle-key", cpa_args.oracle_key)->required();
    cp->add_option("--blocks", cpa_args.blocks, "Fresh ciphertext blocks used for verification");
    cp->add_option("--garbage", cpa_args.garbage);
    cp->add_option("--seed", cpa_args.seed);
    cp->add_flag("--random-plaintexts", cpa_args.random_plaintexts);
    cp->add_option("-o,--output", cpa_args.output, "Recovered message band file");

    PerturbArgs pt_args;
    auto* pt = app.add_subcommand("perturb", "Decode with a randomly perturbed key");
    pt->add_option("--key", pt_args.key)->required();
    pt->add_option("--offset", pt_args.offset, "Largest change per key value");
    pt->add_option("--garbage", pt_args.garbage);
    pt->add_option("--text", pt_args.text);
    pt->add_option("--seed", pt_args.seed);
    pt->add_option("-o,--output", pt_args.output, "Per-coordinate CSV");

    ExperimentArgs ex_args;
    auto* ex = app.add_subcommand("experiment", "Encode, brute-force around the key and histogram");
    add_range(ex, "--key-range", ex_args.key_range, "Key value range lo hi");
    ex->get_option("--key-range")->required();
    ex->add_option("--garbage", ex_args.garbage);
    auto* ex_text = ex->add_option("--text", ex_args.text);
    auto* ex_in = ex->add_option("--in", ex_args.input);
    ex_text->excludes(ex_in);
    ex->add_option("--orders", ex_args.orders)->delimiter(',');
    ex->add_option("--offset", ex_args.offset);
    ex->add_option("--seed", ex_args.seed);
    ex->add_option("--threads", ex_args.threads)->check(CLI::PositiveNumber);
    ex->add_option("--budget", ex_args.budget);
    ex->add_option("--out-dir", ex_args.out_dir);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*kg) return run_keygen(keygen_args, out);
        if (*en) {
            if (!*en_text && !*en_in) throw std::invalid_argument("encode needs --text or --in");
            return run_encode(encode_args, out);
        }
        if (*de) return run_decode(decode_args, out);
        if (*bf) return run_bruteforce(bf_args, out, err);
        if (*an) return run_analyze(an_args, out);
        if (*cp) return run_cpa(cpa_args, out);
        if (*pt) return run_perturb(pt_args, out);
        if (*ex) {
            if (!*ex_text && !*ex_in) throw std::invalid_argument("experiment needs --text or --in");
            return run_experiment(ex_args, out);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitCrypto;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCrypto;
    }
    return kExitUsage;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args(argv, argv + argc);
    return run_cli(args, out, err);
}

} // namespace framecipher::cli
