#include "framecipher/io.hpp"
#include "framecipher/scheme.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace framecipher;

namespace {

const std::string kText(1024, 'x');

SchemeKey key_for(int scheme) {
    KeygenParams p;
    p.scheme = scheme_from_int(scheme);
    p.seed = 11;
    if (scheme >= 3) p.orders = {4, 4};
    return keygen(p);
}

void BM_Encode(benchmark::State& state) {
    const Cipher cipher(key_for(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(cipher.encode(kText, GarbageSpec{128, 5}));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * kText.size()));
}
BENCHMARK(BM_Encode)->DenseRange(1, 5);

void BM_Decode(benchmark::State& state) {
    const Cipher cipher(key_for(static_cast<int>(state.range(0))));
    const CiphertextStream c = cipher.encode(kText, GarbageSpec{128, 5});
    for (auto _ : state) benchmark::DoNotOptimize(cipher.decode(c));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * kText.size()));
}
BENCHMARK(BM_Decode)->DenseRange(1, 5);

void BM_SerializeCiphertext(benchmark::State& state) {
    const CiphertextStream c = encode(key_for(5), kText, GarbageSpec{128, 5});
    for (auto _ : state) benchmark::DoNotOptimize(parse_ciphertext(serialize_ciphertext(c)));
}
BENCHMARK(BM_SerializeCiphertext);

} // namespace
