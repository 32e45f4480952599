#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "pp7/equiv.hpp"
#include "pp7/hermite.hpp"
#include "pp7/poly.hpp"
#include "pp7/search.hpp"

using namespace pp7;

namespace {

NormalizedSeptic random_septic(const Field& F, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(F.q() - 1));
    return NormalizedSeptic::from_tuple(Elem{d(rng)}, Elem{d(rng)}, Elem{d(rng)}, Elem{d(rng)}, Elem{d(rng)});
}

void BM_FieldMul(benchmark::State& state)
{
    const auto F = Field::of_order(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<std::uint32_t> d(1, static_cast<std::uint32_t>(F.q() - 1));
    Elem a{d(rng)};
    const Elem b{d(rng)};
    for (auto _ : state) {
        a = F.add(F.mul(a, b), F.one());
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(409)->Arg(343)->Arg(2187);

void BM_FieldInv(benchmark::State& state)
{
    const auto F = Field::of_order(static_cast<int>(state.range(0)));
    Elem a = F.generator();
    for (auto _ : state) {
        a = F.mul(F.inv(a), F.generator());
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldInv)->Arg(409)->Arg(2187);

void BM_SepticTester(benchmark::State& state)
{
    const auto F = Field::of_order(static_cast<int>(state.range(0)));
    SepticPPTester is_pp(F);
    std::mt19937_64 rng(2);
    std::vector<NormalizedSeptic> inputs;
    for (int i = 0; i < 256; ++i)
        inputs.push_back(random_septic(F, rng));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(is_pp(inputs[i++ & 255]));
}
BENCHMARK(BM_SepticTester)->Arg(23)->Arg(125)->Arg(409);

void BM_HermiteFull(benchmark::State& state)
{
    const auto F = Field::of_order(static_cast<int>(state.range(0)));
    // x^7 permutes these fields, so every exponent is checked.
    const auto f = Polynomial::monomial(F.one(), 7);
    for (auto _ : state)
        benchmark::DoNotOptimize(hermite_full(F, f));
}
BENCHMARK(BM_HermiteFull)->Arg(11)->Arg(23)->Arg(47);

void BM_Canonical(benchmark::State& state)
{
    const auto F = Field::of_order(static_cast<int>(state.range(0)));
    std::mt19937_64 rng(3);
    std::vector<NormalizedSeptic> inputs;
    for (int i = 0; i < 256; ++i)
        inputs.push_back(random_septic(F, rng));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical(F, inputs[i++ & 255]));
}
BENCHMARK(BM_Canonical)->Arg(25)->Arg(409);

void BM_Classify(benchmark::State& state)
{
    const auto F = Field::of_order(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(F, {1, false}));
}
BENCHMARK(BM_Classify)->Arg(11)->Arg(23)->Arg(49)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
