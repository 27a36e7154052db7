#include <benchmark/benchmark.h>

#include "pcw/num.hpp"
#include "pcw/suites.hpp"

using namespace pcw;

namespace {

const Kit<SkModel>& kit() {
    static Workbench wb;
    return wb.kit();
}

void BM_SkAddNumerals(benchmark::State& state) {
    const auto& k = kit();
    Sk m = k.numeral(state.range(0)), n = k.numeral(state.range(0));
    std::uint64_t steps = 0;
    for (auto _ : state) {
        Fuel f(100000000);
        auto r = apply2(SkModel{}, k.get("add"), m, n, f);
        benchmark::DoNotOptimize(r);
        steps += f.spent();
    }
    state.counters["steps/s"] = benchmark::Counter(static_cast<double>(steps), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SkAddNumerals)->Arg(4)->Arg(16)->Arg(64);

void BM_SkDivergenceToBudget(benchmark::State& state) {
    Sk sii = kit().get("sii");
    for (auto _ : state) {
        Fuel f(state.range(0));
        benchmark::DoNotOptimize(sk_apply(sii, sii, f));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SkDivergenceToBudget)->Arg(10000)->Arg(1000000);

void BM_CompileText(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(kit().compile_text("\\x y z. #p (x z) (y (#suc z))"));
}
BENCHMARK(BM_CompileText);

void BM_NumApply(benchmark::State& state) {
    NumModel num;
    Natural f = godel_encode(kit().get("p1")), a = godel_encode(kit().numeral(state.range(0)));
    for (auto _ : state) {
        Fuel fuel(100000000);
        benchmark::DoNotOptimize(num.apply(f, a, fuel));
    }
}
BENCHMARK(BM_NumApply)->Arg(1)->Arg(3)->Arg(5);

void BM_GodelRoundTrip(benchmark::State& state) {
    Sk e = kit().numeral(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(godel_decode(godel_encode(e)));
}
BENCHMARK(BM_GodelRoundTrip)->Arg(2)->Arg(5);

}  // namespace
