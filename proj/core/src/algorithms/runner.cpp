#include "mpia/algorithms/runner.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "mpia/immune/activation.hpp"
#include "mpia/immune/clone.hpp"
#include "mpia/immune/selection.hpp"
#include "mpia/sorting/nondominated.hpp"

namespace mpia {

namespace {

GenerationTrace make_trace(const Population& population, const PartyScheme& scheme,
                           std::size_t generation, std::uint64_t fe_count, double mcm,
                           std::size_t n_activate) {
    GenerationTrace trace;
    trace.generation = generation;
    trace.fe_count = fe_count;
    trace.mcm = mcm;
    trace.n_activate = n_activate;
    for (const auto& ind : population.members) {
        if (ind.mp_rank == 1) ++trace.mp_front_size;
    }
    trace.party_front_sizes.assign(scheme.party_count(), 0);
    for (const auto& ind : population.members) {
        for (std::size_t k = 0; k < scheme.party_count(); ++k) {
            if (ind.party_ranks[k] == 1) ++trace.party_front_sizes[k];
        }
    }
    return trace;
}

RunResult run_impl(const Problem& problem, const RunConfig& config, bool adaptive_activation_on,
                   bool guided_on) {
    config.validate(problem);
    auto started = std::chrono::steady_clock::now();

    const PartyScheme& scheme = problem.scheme();
    const std::size_t n_keep = config.population_size;
    const std::uint64_t budget = config.fe_budget;
    const std::uint64_t t_max = budget / n_keep;  // generations for the p1 schedule

    Rng rng(config.seed);
    Population population = problem.initialize(n_keep, rng);
    std::uint64_t fe = 0;
    for (auto& ind : population.members) {
        problem.evaluate(ind);
        ++fe;
    }
    mpnds2(population, scheme);
    sort_population(population);
    population.generation = 0;
    population.fe_count = fe;

    RunResult result;
    result.trace.push_back(make_trace(population, scheme, 0, fe, -1.0, 0));

    std::size_t generation = 0;
    while (fe < budget) {
        ActivationSet activation;
        if (adaptive_activation_on) {
            activation = adaptive_activation(population, scheme, config.operators,
                                             &result.counters.cover_metric_calls);
        } else {
            activation.size = std::min(config.fixed_activation_size, population.size());
            activation.achieved_mcm = -1.0;
        }

        CloneList clones = clone(population, activation.size, n_keep);
        std::uint64_t remaining = budget - fe;
        if (clones.clones.size() > remaining) {
            clones.clones.resize(remaining);
            clones.sources.resize(remaining);
        }

        std::size_t schedule_t = std::min<std::uint64_t>(generation, t_max);
        std::vector<Individual> offspring = adaptive_operator(
            population, activation.size, clones, schedule_t, t_max, problem.lower_bounds(),
            problem.upper_bounds(), config.operators, guided_on, rng,
            &result.counters.variation);
        for (auto& child : offspring) {
            problem.evaluate(child);
            ++fe;
        }

        Population merged;
        merged.members = std::move(population.members);
        merged.members.insert(merged.members.end(), std::make_move_iterator(offspring.begin()),
                              std::make_move_iterator(offspring.end()));
        mpnds2(merged, scheme);
        sort_population(merged);
        population = selection(merged, n_keep);

        ++generation;
        population.generation = static_cast<int>(generation);
        population.fe_count = fe;
        result.trace.push_back(make_trace(population, scheme, generation, fe,
                                          activation.achieved_mcm, activation.size));
    }

    result.final_population = std::move(population);
    for (std::size_t i : multiparty_pareto_filter(result.final_population, scheme)) {
        result.mps.push_back(result.final_population.members[i]);
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace

Variant parse_variant(const std::string& name) {
    if (name == "MPIA") return Variant::Mpia;
    if (name == "MPIA-BASE") return Variant::MpiaBase;
    if (name == "MPIA-A") return Variant::MpiaA;
    if (name == "MPIA-B") return Variant::MpiaB;
    throw std::invalid_argument("unknown variant: " + name);
}

std::string variant_name(Variant variant) {
    switch (variant) {
        case Variant::Mpia: return "MPIA";
        case Variant::MpiaBase: return "MPIA-BASE";
        case Variant::MpiaA: return "MPIA-A";
        case Variant::MpiaB: return "MPIA-B";
    }
    throw std::invalid_argument("unknown variant enum value");
}

void RunConfig::validate(const Problem& problem) const {
    operators.validate();
    if (population_size == 0) {
        throw std::invalid_argument("RunConfig: population_size must be positive");
    }
    if (fe_budget < population_size) {
        throw std::invalid_argument(
            "RunConfig: fe_budget must cover at least the initial population");
    }
    bool adaptive = variant == Variant::Mpia || variant == Variant::MpiaA;
    if (adaptive && population_size < operators.activate_num_list.front()) {
        throw std::invalid_argument(
            "RunConfig: population smaller than every listed activation size");
    }
    if (!adaptive && fixed_activation_size == 0) {
        throw std::invalid_argument("RunConfig: fixed_activation_size must be positive");
    }
    if (problem.dimension() == 0) throw std::invalid_argument("RunConfig: zero-dimensional problem");
    if (problem.lower_bounds().size() != problem.dimension() ||
        problem.upper_bounds().size() != problem.dimension()) {
        throw std::invalid_argument("RunConfig: problem bounds inconsistent with dimension");
    }
    for (std::size_t j = 0; j < problem.dimension(); ++j) {
        if (!(problem.lower_bounds()[j] <= problem.upper_bounds()[j])) {
            throw std::invalid_argument("RunConfig: inverted variable bounds");
        }
    }
}

RunResult run_mpia(const Problem& problem, const RunConfig& config) {
    RunConfig full = config;
    full.variant = Variant::Mpia;
    return run_impl(problem, full, true, true);
}

RunResult run_variant(const Problem& problem, const RunConfig& config) {
    switch (config.variant) {
        case Variant::Mpia: return run_impl(problem, config, true, true);
        case Variant::MpiaBase: return run_impl(problem, config, false, false);
        case Variant::MpiaA: return run_impl(problem, config, true, false);
        case Variant::MpiaB: return run_impl(problem, config, false, true);
    }
    throw std::invalid_argument("run_variant: unknown variant");
}

}  // namespace mpia
