#include <benchmark/benchmark.h>

#include "qform/forms.hpp"
#include "qform/genus.hpp"
#include "qform/lambert.hpp"
#include "qform/series.hpp"
#include "qform/verify.hpp"

using namespace qform;

static void theta(benchmark::State& state)
{
    auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(theta_series({7, 4, 7}, N));
}
BENCHMARK(theta)->Arg(1000)->Arg(10000)->Arg(100000);

static void eta(benchmark::State& state)
{
    auto N = static_cast<std::size_t>(state.range(0));
    EtaQuotientSpec spec{0, {{2, 5, 1}, {4, -2, 1}, {1, -2, 1}}};
    for (auto _ : state)
        benchmark::DoNotOptimize(eta_quotient(spec, N));
}
BENCHMARK(eta)->Arg(100)->Arg(500);

static void series_product(benchmark::State& state)
{
    auto N = static_cast<std::size_t>(state.range(0));
    auto a = theta_series({1, 0, 5}, N);
    auto b = theta_series({2, 2, 3}, N);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(series_product)->Arg(1000)->Arg(5000);

static void class_group(benchmark::State& state)
{
    Discriminant delta(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_reduced_forms(delta));
}
BENCHMARK(class_group)->Arg(-2300)->Arg(-99999)->Arg(-9999999);

static void genera(benchmark::State& state)
{
    Discriminant delta(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(genus_partition(delta));
}
BENCHMARK(genera)->Arg(-180)->Arg(-2300)->Arg(-7392);

static void composition(benchmark::State& state)
{
    auto forms = enumerate_reduced_forms(Discriminant(-2300));
    for (auto _ : state)
        for (auto const& f : forms)
            benchmark::DoNotOptimize(compose(f, forms[1]));
}
BENCHMARK(composition);

static void lambert(benchmark::State& state)
{
    auto N = static_cast<std::size_t>(state.range(0));
    auto spec = named_lambert("S180");
    for (auto _ : state)
        benchmark::DoNotOptimize(lambert_expand(spec, N));
}
BENCHMARK(lambert)->Arg(1000)->Arg(10000);

static void lift_identities(benchmark::State& state)
{
    auto cases = default_registry().select("thm1/-20/*");
    for (auto _ : state)
        for (auto const* c : cases)
            benchmark::DoNotOptimize(run_case(*c));
}
BENCHMARK(lift_identities)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
