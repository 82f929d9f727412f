#include "grmf/factorization.hpp"
#include "grmf/orlov.hpp"
#include "grmf/sectors.hpp"
#include "grmf/spectra.hpp"

#include <benchmark/benchmark.h>

using namespace grmf;

namespace {

Potential z_fermat(int d, int n) { return z_graded_fermat(std::vector<Int>(n, d)); }

std::vector<GroupElement> window(const Potential& w)
{
    const Int Wd = w.ring->witness_of(w.d), soc = socle_witness_degree(w);
    return degrees_in_window(*w.ring, -soc - Wd, soc + Wd);
}

void BM_RhomTable(benchmark::State& st)
{
    auto w = z_fermat((int)st.range(0), (int)st.range(1));
    auto ms = window(w);
    for (auto _ : st) benchmark::DoNotOptimize(rhom_table(w, ms, -4, 4));
    st.SetLabel(std::to_string(ms.size()) + " degrees");
}
BENCHMARK(BM_RhomTable)->Args({3, 1})->Args({6, 1})->Args({3, 3})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_HHTable(benchmark::State& st)
{
    auto w = z_fermat((int)st.range(0), (int)st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(hh_table(w, -4, 4));
}
BENCHMARK(BM_HHTable)->Args({3, 3})->Args({3, 6})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_HHBruteforce(benchmark::State& st)
{
    auto w = z_fermat((int)st.range(0), 1);
    auto ms = window(w);
    for (auto _ : st) benchmark::DoNotOptimize(hh_bruteforce(w, ms, -4, 4));
}
BENCHMARK(BM_HHBruteforce)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_BruteforceTwoVariables(benchmark::State& st)
{
    auto w = z_fermat((int)st.range(0), 2);
    auto ms = window(w);
    for (auto _ : st) benchmark::DoNotOptimize(hh_bruteforce(w, ms, -2, 2));
}
BENCHMARK(BM_BruteforceTwoVariables)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Diagonal(benchmark::State& st)
{
    auto w = z_fermat((int)st.range(0), (int)st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(diagonal(w));
}
BENCHMARK(BM_Diagonal)->Args({3, 1})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_FermatBounds(benchmark::State& st)
{
    std::vector<Int> d(st.range(0), 3);
    for (size_t i = 0; i < d.size(); i += 2) d[i] = 4;
    auto s = WeightSequence::make(d);
    for (auto _ : st) benchmark::DoNotOptimize(fermat_bounds(s));
}
BENCHMARK(BM_FermatBounds)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_FermatUpperBruteforce(benchmark::State& st)
{
    std::vector<Int> d(st.range(0), 3);
    for (size_t i = 0; i < d.size(); i += 2) d[i] = 4;
    auto s = WeightSequence::make(d);
    for (auto _ : st) benchmark::DoNotOptimize(fermat_upper_bound_bruteforce(s));
}
BENCHMARK(BM_FermatUpperBruteforce)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_NilpotentOrder(benchmark::State& st)
{
    auto w = z_fermat((int)st.range(0), 3);
    auto p = w.ring->parse("x0 + x1 + x2");
    auto zero = GradedIdealSpec::make(w.ring, {});
    for (auto _ : st) benchmark::DoNotOptimize(nl_dimension_principal(w, p, zero));
}
BENCHMARK(BM_NilpotentOrder)->DenseRange(3, 5, 1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
