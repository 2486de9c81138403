#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/immune/clone.hpp"
#include "mpia/immune/config.hpp"
#include "mpia/rng.hpp"

namespace mpia {

/// Probability of taking the exploratory rand/2/bin branch at generation t of
/// T: 0.95 / (1 + exp(20 t/T - 3)). Strictly decreasing, 0.475 at t = 0.15 T.
double p1_schedule(double t, double t_max);

/// Spread factor of simulated binary crossover for a uniform draw u and
/// distribution index eta.
double sbx_delta(double u, double eta);

/// rand/2/bin differential crossover. r holds four row indices into pool;
/// forced_j crosses unconditionally. One uniform draw is consumed per
/// variable. The result is clamped to the bounds.
std::vector<double> de_rand2bin(std::span<const double> base,
                                const std::vector<std::vector<double>>& pool,
                                std::span<const std::size_t> r, double cr, double f,
                                std::size_t forced_j, std::span<const double> lower,
                                std::span<const double> upper, Rng& rng);

/// rand/1/bin differential crossover; r holds two row indices into pool.
std::vector<double> de_rand1bin(std::span<const double> base,
                                const std::vector<std::vector<double>>& pool,
                                std::span<const std::size_t> r, double cr, double f,
                                std::size_t forced_j, std::span<const double> lower,
                                std::span<const double> upper, Rng& rng);

/// Guided simulated binary crossover: each variable crosses with probability
/// pc, producing 0.5 [(1+d) base_j + (1-d) guide_j] with d = sbx_delta(u, eta).
std::vector<double> guided_sbx(std::span<const double> base, std::span<const double> guide,
                               double pc, double eta, std::span<const double> lower,
                               std::span<const double> upper, Rng& rng);

/// Polynomial mutation with per-variable rate and distribution index eta,
/// applied in place; the result stays within the bounds.
void polynomial_mutation(std::vector<double>& x, std::span<const double> lower,
                         std::span<const double> upper, double rate, double eta, Rng& rng);

/// Guide lookup for the guided crossover: empty when the clone sits on the
/// first multiparty front; otherwise a uniform pick among individuals with a
/// strictly better multiparty rank that match or beat the clone in at least
/// one party rank. The uniform draw is consumed only when candidates exist.
std::optional<std::size_t> find_guide(const Individual& clone, const Population& sorted_population,
                                      Rng& rng);

/// Per-branch usage counters for one adaptive_operator invocation.
struct VariationCounters {
    std::size_t op1 = 0;
    std::size_t op2 = 0;
    std::size_t op3 = 0;
    std::size_t mutation_only = 0;
};

/// Produces exactly one offspring per clone. Branch choice per clone: with
/// probability p1_schedule(t, t_max) the rand/2/bin operator; otherwise the
/// guided crossover is attempted (at most one success per source and
/// generation, each attempt passing a p2 coin) with rand/1/bin as fallback.
/// Polynomial mutation at rate 1/d always runs last. Offspring are returned
/// unevaluated. `guided_enabled` = false replaces the guided branch by
/// rand/1/bin outright.
std::vector<Individual> adaptive_operator(const Population& sorted_population,
                                          std::size_t n_activate, const CloneList& clones,
                                          std::size_t t, std::size_t t_max,
                                          std::span<const double> lower,
                                          std::span<const double> upper,
                                          const OperatorConfig& config, bool guided_enabled,
                                          Rng& rng, VariationCounters* counters = nullptr);

}  // namespace mpia
