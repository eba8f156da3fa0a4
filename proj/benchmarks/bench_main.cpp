#include <benchmark/benchmark.h>

#include <random>

#include "jscfp/oracle.hpp"

using namespace jscfp;

namespace {

CoupledOperator example_f() { return linear_mix(1.0 / 3.0, -1.0 / 3.0); }

FiniteInstance random_instance(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_real_distribution<double> weight(1.0, 2.0);
    FiniteInstance inst;
    inst.distance.assign(n, std::vector<ExtReal>(n, ExtReal(0)));
    inst.leq.assign(n, std::vector<bool>(n));
    inst.f.assign(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
        inst.labels.push_back("p" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            inst.leq[i][j] = i <= j;
            inst.f[i][j] = pick(rng);
            if (i < j) inst.distance[i][j] = inst.distance[j][i] = ExtReal(weight(rng));
        }
    }
    return inst;
}

} // namespace

static void BM_SolveWorkedExample(benchmark::State& state) {
    const auto ordered = usual_order(builtin_space(SpaceKind::dislocated_abs));
    SolveConfig cfg;
    cfg.declared_k = 2.0 / 3.0;
    cfg.verify_hypotheses = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(solve(ordered, example_f(), Point{ExtReal(-3)}, Point{ExtReal(2)}, cfg));
}
BENCHMARK(BM_SolveWorkedExample)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_EstimateContraction(benchmark::State& state) {
    const auto ordered = usual_order(builtin_space(SpaceKind::dislocated_abs));
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_contraction(ordered, example_f(), ContractionForm::bhaskar_plus,
                                                      static_cast<std::size_t>(state.range(0)), 7, 2.0 / 3.0));
}
BENCHMARK(BM_EstimateContraction)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_ExactContractionConstant(benchmark::State& state) {
    const FiniteInstance inst = random_instance(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(exact_contraction_constant(inst, ContractionForm::bhaskar_plus));
}
BENCHMARK(BM_ExactContractionConstant)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_CrossCheckEngineered(benchmark::State& state) {
    const FiniteInstance inst = engineered_instance(static_cast<std::uint64_t>(state.range(0)));
    const SolveConfig cfg;
    for (auto _ : state) benchmark::DoNotOptimize(cross_check(inst, cfg));
}
BENCHMARK(BM_CrossCheckEngineered)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
