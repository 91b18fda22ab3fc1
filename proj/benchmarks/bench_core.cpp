#include <benchmark/benchmark.h>

#include <random>

#include "chu/canonical.hpp"
#include "chu/enumerate.hpp"
#include "chu/gallery.hpp"
#include "chu/morphism.hpp"
#include "chu/sweeps.hpp"

using namespace chu;

namespace {

Space random_space_fixture(std::size_t objects, std::size_t attributes) {
    std::mt19937_64 rng(objects * 131 + attributes);
    return sweeps::random_space(rng, Alphabet::binary(), objects, attributes, SpaceFilter::All);
}

void BM_CanonicalForm(benchmark::State& state) {
    Space s = random_space_fixture(state.range(0), state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(s));
}
BENCHMARK(BM_CanonicalForm)->Args({4, 4})->Args({6, 6})->Args({8, 8});

void BM_EnumerateSpaces(benchmark::State& state) {
    Alphabet bin = Alphabet::binary();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            enumerate_spaces(bin, state.range(0), state.range(1), SpaceFilter::All));
}
BENCHMARK(BM_EnumerateSpaces)->Args({2, 2})->Args({2, 3})->Args({3, 3});

void BM_MorphismEnumeration(benchmark::State& state) {
    Space s = random_space_fixture(state.range(0), state.range(0));
    Space t = random_space_fixture(state.range(0) + 1, state.range(0) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_morphisms(s, t, MorphismFilter::All));
}
BENCHMARK(BM_MorphismEnumeration)->Arg(2)->Arg(3)->Arg(4);

void BM_MonicSearch(benchmark::State& state) {
    Space s = random_space_fixture(state.range(0), state.range(0));
    Space t = random_space_fixture(state.range(0) + 2, state.range(0) + 2);
    for (auto _ : state) benchmark::DoNotOptimize(find_monic_c(s, t));
}
BENCHMARK(BM_MonicSearch)->Arg(3)->Arg(4)->Arg(5);

void BM_OrderChainColimit(benchmark::State& state) {
    const std::size_t w = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(colimit(gallery::order_chain(w), w));
}
BENCHMARK(BM_OrderChainColimit)->Arg(4)->Arg(8)->Arg(16);

void BM_RandomChainColimit(benchmark::State& state) {
    std::mt19937_64 rng(17);
    Chain ch = sweeps::random_chain(rng, ChainCategory::iE, state.range(0), 3, 4);
    const std::size_t n = *ch.length();
    for (auto _ : state) benchmark::DoNotOptimize(colimit(ch, n));
}
BENCHMARK(BM_RandomChainColimit)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
