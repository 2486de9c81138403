#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/immune/config.hpp"
#include "mpia/immune/variation.hpp"
#include "mpia/problems/problem.hpp"

namespace mpia {

enum class Variant { Mpia, MpiaBase, MpiaA, MpiaB };

Variant parse_variant(const std::string& name);
std::string variant_name(Variant variant);

struct RunConfig {
    std::size_t population_size = 105;
    std::uint64_t fe_budget = 140000;
    std::uint64_t seed = 1;
    Variant variant = Variant::Mpia;
    OperatorConfig operators;
    std::size_t fixed_activation_size = 20;

    /// Throws std::invalid_argument with a descriptive message when the
    /// configuration cannot drive the given problem. Called before any
    /// evaluation.
    void validate(const Problem& problem) const;
};

struct GenerationTrace {
    std::size_t generation = 0;
    std::uint64_t fe_count = 0;
    /// Achieved MCM of the activation step; -1 for generation 0 and for the
    /// fixed-activation variants, which never measure it.
    double mcm = -1.0;
    std::size_t n_activate = 0;
    std::size_t mp_front_size = 0;
    std::vector<std::size_t> party_front_sizes;
};

struct RunCounters {
    std::size_t cover_metric_calls = 0;
    VariationCounters variation;
};

struct RunResult {
    Population final_population;
    std::vector<Individual> mps;  ///< multiparty Pareto set of the final population
    std::vector<GenerationTrace> trace;
    RunCounters counters;
    double wall_seconds = 0.0;
};

/// Runs the full algorithm: uniform (or problem-specific) initialization,
/// two-round sorting, then per generation adaptive activation, convergence-
/// weighted cloning, adaptive variation, merge and selection, until the
/// evaluation budget is spent. Deterministic for a fixed seed; the variant
/// field of the config is ignored.
RunResult run_mpia(const Problem& problem, const RunConfig& config);

/// Dispatches on config.variant. The BASE variant uses a fixed activation
/// size and replaces the guided crossover by rand/1/bin; variant A restores
/// adaptive activation only, variant B the guided crossover only.
RunResult run_variant(const Problem& problem, const RunConfig& config);

}  // namespace mpia
