#include <benchmark/benchmark.h>

#include "pcw/suites.hpp"

using namespace pcw;

namespace {

Workbench& wb() {
    static Workbench w;
    return w;
}

PartialFn<SkModel> table_oracle() {
    OracleTable<Sk> t;
    for (std::uint64_t n = 0; n < 10; ++n) t.set(wb().numeral(n), wb().numeral((n * 7) % 10));
    return PartialFn<SkModel>::table(t);
}

void BM_OracleRf(benchmark::State& state) {
    auto f = table_oracle();
    const auto& k = wb().kit();
    for (auto _ : state) {
        Fuel fuel(1000000);
        benchmark::DoNotOptimize(oracle_apply(k, k.get("rf"), wb().numeral(3), f, fuel));
    }
}
BENCHMARK(BM_OracleRf);

void BM_OracleSfChain(benchmark::State& state) {
    auto f = table_oracle();
    const auto& k = wb().kit();
    OracleModel<SkModel> om(k, f);
    std::vector<Sk> args{k.get("kf"), k.get("rf"), wb().numeral(4)};
    for (auto _ : state) {
        Fuel fuel(100000000);
        benchmark::DoNotOptimize(apply_chain(om, om.s(), args, fuel));
    }
}
BENCHMARK(BM_OracleSfChain);

void BM_UniversalTracker(benchmark::State& state) {
    const auto& k = wb().kit();
    OracleTable<Sk> t{{wb().numeral(2), wb().numeral(5)}};
    auto tc = universal_tracker(identity_pack(k, table_to_code(t, k)), k);
    for (auto _ : state) {
        Fuel fuel(100000000);
        benchmark::DoNotOptimize(apply2(wb().sk(), tc.tracker, k.get("rf"), wb().numeral(2), fuel));
    }
}
BENCHMARK(BM_UniversalTracker);

void BM_SigmaNativeVsCoded(benchmark::State& state) {
    const auto& k = wb().kit();
    OracleTable<Sk> t{{wb().numeral(1), wb().numeral(2)}};
    auto alpha = BElem<SkModel>::table(t);
    auto kap = build_kappa(k);
    auto sig = state.range(0) ? build_sigma_native(k) : build_sigma(k);
    for (auto _ : state) {
        Fuel fuel(1000000000);
        benchmark::DoNotOptimize(b_apply_chain(k, sig, {kap, kap, alpha}, wb().numeral(1), fuel));
    }
}
BENCHMARK(BM_SigmaNativeVsCoded)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FixpointStages(benchmark::State& state) {
    const auto& k = wb().kit();
    auto F = functional_by_name(k, "const:5");
    std::vector<Sk> probes{wb().numeral(0), wb().numeral(1), wb().numeral(2)};
    for (auto _ : state) benchmark::DoNotOptimize(fixpoint_stage(k, F, static_cast<int>(state.range(0)), probes, 100000));
}
BENCHMARK(BM_FixpointStages)->Arg(2)->Arg(8);

}  // namespace
