#include "selmer/cocycle.hpp"
#include "selmer/normal_form.hpp"
#include "selmer/pipeline.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace selmer;

namespace {

std::string data(const std::string& rel)
{
    return std::string(SELMER_DATA_DIR) + "/" + rel;
}

IntMatrix random_matrix(std::size_t n, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(-20, 20);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = dist(rng);
        }
    }
    return m;
}

void BM_Hnf(benchmark::State& st)
{
    const IntMatrix m = random_matrix(static_cast<std::size_t>(st.range(0)), 1);
    for (auto _ : st) {
        benchmark::DoNotOptimize(hnf_column(m));
    }
}
BENCHMARK(BM_Hnf)->Arg(8)->Arg(16)->Arg(32);

void BM_Snf(benchmark::State& st)
{
    const IntMatrix m = random_matrix(static_cast<std::size_t>(st.range(0)), 2);
    for (auto _ : st) {
        benchmark::DoNotOptimize(snf(m));
    }
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(32);

void BM_ResolveRegular(benchmark::State& st)
{
    const PermGroup g = st.range(0) == 0 ? symmetric_group(3) : dihedral_group(4);
    const GModule m = perm_module(g, {Subgroup::trivial(g)}).module_mod(3);
    IntVector vals;
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
        vals.push_back(1);
    }
    const CycloCharacter chi(g, 3, vals);
    for (auto _ : st) {
        benchmark::DoNotOptimize(resolve(m, chi, 2));
    }
}
BENCHMARK(BM_ResolveRegular)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TorsionCheck(benchmark::State& st)
{
    const PermGroup g = symmetric_group(3);
    const GModule m = perm_module(g, {Subgroup::trivial(g)}).module_mod(3);
    const DualSequence ds = dual_sequence(resolve(m, CycloCharacter::trivial(g, 3), 2));
    for (auto _ : st) {
        benchmark::DoNotOptimize(torsion_check(ds, 360));
    }
}
BENCHMARK(BM_TorsionCheck)->Unit(benchmark::kMillisecond);

void BM_CocycleS4(benchmark::State& st)
{
    const GModule m = GModule::trivial(symmetric_group(4), {2});
    for (auto _ : st) {
        benchmark::DoNotOptimize(h1_finite(m));
    }
}
BENCHMARK(BM_CocycleS4)->Unit(benchmark::kMillisecond);

void BM_Selmer(benchmark::State& st)
{
    const char* module = st.range(0) == 0 ? "modules/kummer_z2.json" : "modules/kummer_z2_over_zeta3.json";
    const char* fixture = st.range(0) == 0 ? "fixtures/q_trivial.json" : "fixtures/q_zeta3_237.json";
    const char* system = st.range(0) == 0 ? "systems/kummer_custom_5.json" : "systems/relaxed_23.json";
    const ModuleFile mf = parse_module(read_file(data(module)));
    const ArithmeticFixture f = parse_fixture(read_file(data(fixture)));
    const SelmerSystem sys = parse_system(read_file(data(system)));
    for (auto _ : st) {
        benchmark::DoNotOptimize(run_selmer(mf, f, sys));
    }
}
BENCHMARK(BM_Selmer)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
