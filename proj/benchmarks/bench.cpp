#include <benchmark/benchmark.h>

#include "pariscba/cba.hpp"
#include "pariscba/climate.hpp"
#include "pariscba/costs.hpp"
#include "pariscba/fixtures.hpp"
#include "pariscba/impacts.hpp"
#include "pariscba/kaya.hpp"

using namespace pariscba;

static void BM_TemperaturePath(benchmark::State& state) {
    auto cal = fixtures::calibrated_params();
    auto s = fixtures::ssp585_like();
    for (auto _ : state) {
        auto path = climate::temperature_path(s, cal.carbon, cal.climate);
        benchmark::DoNotOptimize(path.temperature.back());
    }
}
BENCHMARK(BM_TemperaturePath);

static void BM_Calibrate(benchmark::State& state) {
    auto anchors = fixtures::default_anchors();
    for (auto _ : state) {
        auto r = climate::calibrate(anchors.anchors);
        benchmark::DoNotOptimize(r.climate.ecs);
    }
}
BENCHMARK(BM_Calibrate);

static void BM_InvertEmissions(benchmark::State& state) {
    auto cal = fixtures::calibrated_params();
    auto base = fixtures::ssp585_like();
    for (auto _ : state) {
        auto bent = climate::invert_emissions(base, 2.0, cal.carbon, cal.climate);
        benchmark::DoNotOptimize(bent.emissions.back());
    }
}
BENCHMARK(BM_InvertEmissions);

static void BM_FitAllForms(benchmark::State& state) {
    auto est = impacts::parse_estimates(fixtures::synthetic_estimates_csv());
    for (auto _ : state) {
        std::vector<impacts::ImpactFunction> fits;
        for (int i = 0; i < impacts::kNumForms; ++i)
            fits.push_back(impacts::fit_impact_function(est, impacts::form_by_index(i)));
        auto avg = impacts::model_average(std::move(fits));
        benchmark::DoNotOptimize(avg(3.0));
    }
}
BENCHMARK(BM_FitAllForms);

static void BM_KayaDecompose(benchmark::State& state) {
    auto s = fixtures::historical_kaya();
    for (auto _ : state) {
        auto r = kaya::decompose(s, {1965, 2021});
        benchmark::DoNotOptimize(r.emissions_growth);
    }
}
BENCHMARK(BM_KayaDecompose);

static void BM_MonteCarlo(benchmark::State& state) {
    auto cal = fixtures::calibrated_params();
    auto baseline = fixtures::ssp585_like();
    auto policy = fixtures::paris20();
    cba::MonteCarloConfig cfg;
    cfg.baseline = &baseline;
    cfg.policy = &policy;
    cfg.carbon = cal.carbon;
    cfg.climate = cal.climate;
    cfg.damage = impacts::default_damage_function();
    cfg.cost_model = costs::cost_model_20();
    cfg.n_draws = static_cast<int>(state.range(0));
    cfg.seed = 1;
    for (auto _ : state) {
        auto r = cba::monte_carlo(cfg);
        benchmark::DoNotOptimize(r.npv_draws.back());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
