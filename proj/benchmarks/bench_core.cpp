#include "mteg/calibration.hpp"
#include "mteg/ecd.hpp"
#include "mteg/optimizer.hpp"
#include "mteg/teg_model.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_Evaluate(benchmark::State& state) {
    const mteg::GeneratorDesign d = mteg::reference_design("bi2te3_annealed");
    for (auto _ : state) benchmark::DoNotOptimize(mteg::evaluate(d, 40.0));
}
BENCHMARK(BM_Evaluate);

void BM_SweepLegLength(benchmark::State& state) {
    const mteg::GeneratorDesign d = mteg::reference_design("bi2te3_annealed");
    const auto threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(mteg::sweep(d, mteg::SweepParameter::leg_length, 10e-6, 2000e-6,
                                             static_cast<std::size_t>(state.range(0)), mteg::Spacing::log, 40.0,
                                             threads));
}
BENCHMARK(BM_SweepLegLength)->Args({1000, 1})->Args({100000, 1})->Args({100000, 4});

void BM_OptimizeLegLength(benchmark::State& state) {
    const mteg::GeneratorDesign d = mteg::reference_design("bi2te3_annealed");
    for (auto _ : state) benchmark::DoNotOptimize(mteg::optimize_leg_length(d, 10e-6, 2000e-6));
}
BENCHMARK(BM_OptimizeLegLength);

void BM_SimulatePulseTrain(benchmark::State& state) {
    const mteg::BathSpec bath{80.0, 30.0};
    const mteg::PulsePlan plan{0.05, 4.5, 1200.0, 45.5};
    const auto grid = static_cast<std::size_t>(state.range(0));
    const double dx = 300e-6 / static_cast<double>(grid - 1);
    const double dt = 0.45 * dx * dx / bath.diffusivity;
    for (auto _ : state) benchmark::DoNotOptimize(mteg::simulate_diffusion(300e-6, bath, plan, grid, dt));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(45.5 / dt) * state.range(0));
}
BENCHMARK(BM_SimulatePulseTrain)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
