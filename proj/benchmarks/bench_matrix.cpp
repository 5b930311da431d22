#include "framecipher/hadamard.hpp"
#include "framecipher/scheme.hpp"

#include <benchmark/benchmark.h>

using namespace framecipher;

namespace {

SchemeKey chain_key(std::vector<std::size_t> orders) {
    KeygenParams p;
    p.orders = std::move(orders);
    p.seed = 3;
    return keygen(p);
}

void BM_IntMatrixProduct(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Int>((i * 7 + j * 3) % 11) - 5;
    for (auto _ : state) benchmark::DoNotOptimize(m * m);
}
BENCHMARK(BM_IntMatrixProduct)->Arg(16)->Arg(64)->Arg(128);

void BM_BuildTensorChain(benchmark::State& state) {
    const SchemeKey key = chain_key({4, 4, 4});
    for (auto _ : state) benchmark::DoNotOptimize(build_integer_matrix(key));
}
BENCHMARK(BM_BuildTensorChain);

void BM_CheckScaledOrthogonal(benchmark::State& state) {
    const IntMatrix m = build_integer_matrix(chain_key({4, 4, 4})).matrix();
    for (auto _ : state) benchmark::DoNotOptimize(check_scaled_orthogonal(m));
}
BENCHMARK(BM_CheckScaledOrthogonal);

void BM_Sylvester(benchmark::State& state) {
    const auto p = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sylvester_hadamard(p));
}
BENCHMARK(BM_Sylvester)->Arg(4)->Arg(8);

void BM_DctMatrix(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dct_matrix(n));
}
BENCHMARK(BM_DctMatrix)->Arg(16)->Arg(64);

} // namespace
