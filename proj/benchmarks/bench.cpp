#include "twd/centering.hpp"
#include "twd/diagram.hpp"
#include "twd/fan.hpp"
#include "twd/front.hpp"
#include "twd/lattice.hpp"
#include "twd/smoothing.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace twd;

static void BM_CompleteFan(benchmark::State& st)
{
    const long long n = st.range(0);
    for (auto _ : st)
        benchmark::DoNotOptimize(complete_fan({{n, 1}, {1, n}, {-n, n - 1}}));
}
BENCHMARK(BM_CompleteFan)->Arg(3)->Arg(10)->Arg(30);

static void BM_SmithNormalForm(benchmark::State& st)
{
    const std::size_t n = static_cast<std::size_t>(st.range(0));
    std::mt19937 rng(1);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = std::uniform_int_distribution<int>(-20, 20)(rng);
    for (auto _ : st)
        benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_GenerateDiagram(benchmark::State& st)
{
    const long long n = st.range(0);
    SlopeSet c{{1, 0}, {0, -1}, {-n, n - 1}, {n, 1}};
    std::size_t events = 0;
    for (auto _ : st) {
        FrontDiagram d = generate_diagram(c);
        events = d.events.size();
        benchmark::DoNotOptimize(d);
    }
    st.counters["events"] = static_cast<double>(events);
}
BENCHMARK(BM_GenerateDiagram)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_BoundaryHomology(benchmark::State& st)
{
    ClosedFrontDiagram cd = canonical_closure(generate_diagram({{1, 0}, {0, -1}, {-3, 2}, {3, -1}}));
    for (auto _ : st)
        benchmark::DoNotOptimize(boundary_homology(cd));
}
BENCHMARK(BM_BoundaryHomology)->Unit(benchmark::kMillisecond);

static void BM_SearchCentered(benchmark::State& st)
{
    for (auto _ : st)
        benchmark::DoNotOptimize(search_centered({{1, 1}, {1, 2}, {-2, -1}, {0, -1}}));
}
BENCHMARK(BM_SearchCentered)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
