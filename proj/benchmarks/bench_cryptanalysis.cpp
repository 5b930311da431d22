#include "framecipher/cryptanalysis/brute_force.hpp"
#include "framecipher/cryptanalysis/cpa.hpp"
#include "framecipher/cryptanalysis/perturbation.hpp"
#include "framecipher/scheme.hpp"

#include <benchmark/benchmark.h>

using namespace framecipher;

namespace {

Scheme5Key small_key() {
    KeygenParams p;
    p.orders = {4, 4};
    p.value_min = 5;
    p.value_max = 7;
    p.seed = 21;
    return std::get<Scheme5Key>(keygen(p));
}

void BM_BruteForce(benchmark::State& state) {
    const Scheme5Key key = small_key();
    const CiphertextStream c = encode(key, "Meet me at noon.", GarbageSpec{128, 1});
    BruteForceConfig cfg = BruteForceConfig::around(key, 1);
    cfg.parallelism = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_search(c, cfg));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * guess_space_size(cfg)));
}
BENCHMARK(BM_BruteForce)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_PerturbedDecode(benchmark::State& state) {
    const Scheme5Key key = small_key();
    const auto m = build_integer_matrix(key);
    Scheme5Key moved = key;
    auto v = std::vector<Int>(moved.arrays[0].values().begin(), moved.arrays[0].values().end());
    v[0] += 1;
    moved.arrays[0] = HadamardArrayKey(4, v);
    const IntMatrix p = build_integer_matrix(moved).matrix() - m.matrix();
    IntVector w(m.size(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(perturbed_decode(m, p, w));
}
BENCHMARK(BM_PerturbedDecode);

void BM_Cpa(benchmark::State& state) {
    KeygenParams p;
    p.orders.assign(static_cast<std::size_t>(state.range(0)), 4);
    p.seed = 22;
    const SchemeKey key = keygen(p);
    const std::size_t half = block_size(key) / 2;
    for (auto _ : state) {
        KeyedOracle oracle(key, 128, 9);
        benchmark::DoNotOptimize(cpa_attack(oracle, half, half));
    }
}
BENCHMARK(BM_Cpa)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace
