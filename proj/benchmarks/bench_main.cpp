#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "mpia/algorithms/runner.hpp"
#include "mpia/metrics/hypervolume.hpp"
#include "mpia/problems/grouped_mop.hpp"
#include "mpia/rng.hpp"
#include "mpia/sorting/nondominated.hpp"

namespace {

mpia::Population random_population(std::size_t count, std::size_t m, std::uint64_t seed) {
    mpia::Rng rng(seed);
    mpia::Population population;
    population.members.resize(count);
    for (auto& ind : population.members) {
        ind.objectives.resize(m);
        for (auto& v : ind.objectives) v = rng.uniform01();
    }
    return population;
}

void bm_mpnds2(benchmark::State& state) {
    const mpia::PartyScheme biparty({{0, 1}, {2, 3}}, 4);
    auto base = random_population(static_cast<std::size_t>(state.range(0)), 4, 42);
    for (auto _ : state) {
        auto population = base;
        benchmark::DoNotOptimize(mpia::mpnds2(population, biparty));
    }
}
BENCHMARK(bm_mpnds2)->Arg(105)->Arg(210)->Arg(420);

void bm_hypervolume_2d(benchmark::State& state) {
    mpia::Rng rng(7);
    std::vector<std::vector<double>> points(static_cast<std::size_t>(state.range(0)),
                                            std::vector<double>(2));
    for (auto& p : points) {
        p[0] = rng.uniform01();
        p[1] = rng.uniform01();
    }
    std::vector<double> reference{1.0, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpia::hypervolume_2d(points, reference));
    }
}
BENCHMARK(bm_hypervolume_2d)->Arg(100)->Arg(1000);

void bm_mpia_generation(benchmark::State& state) {
    // One full optimizer pass at a budget of a few generations, dominated by
    // per-generation work.
    auto problem = mpia::make_shared_sphere(10, {2, 2});
    mpia::RunConfig config;
    config.population_size = 105;
    config.fe_budget = 105 * 5;
    config.seed = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mpia::run_mpia(problem, config));
    }
}
BENCHMARK(bm_mpia_generation);

}  // namespace

BENCHMARK_MAIN();
