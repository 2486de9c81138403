#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/rng.hpp"

namespace mpia {

/// A box-bounded multiparty optimization problem. Evaluation fills an
/// individual's objective vector and total constraint violation; it must be
/// pure so populations can be evaluated in any order.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::string name() const = 0;
    virtual std::size_t dimension() const = 0;
    virtual const PartyScheme& scheme() const = 0;
    virtual const std::vector<double>& lower_bounds() const = 0;
    virtual const std::vector<double>& upper_bounds() const = 0;

    /// Fills objectives and violation; x must be within bounds.
    virtual void evaluate(Individual& individual) const = 0;

    std::size_t objective_count() const { return scheme().total_objectives(); }

    /// Seeds an unevaluated population. The default draws every variable
    /// uniformly within its bounds; problems with structured solutions (the
    /// UAV paths) override this.
    virtual Population initialize(std::size_t count, Rng& rng) const {
        Population population;
        population.members.resize(count);
        for (auto& ind : population.members) {
            ind.x.resize(dimension());
            for (std::size_t j = 0; j < dimension(); ++j) {
                ind.x[j] = rng.uniform(lower_bounds()[j], upper_bounds()[j]);
            }
        }
        return population;
    }

    /// True when an analytic sample of the common Pareto front is available.
    virtual bool has_reference_front() const { return false; }

    /// Objective vectors of `count` points sampled from the analytic common
    /// Pareto set. Only valid when has_reference_front() is true.
    virtual std::vector<std::vector<double>> sample_reference_front(std::size_t count,
                                                                    Rng& rng) const {
        (void)count;
        (void)rng;
        throw std::logic_error(name() + ": no analytic reference front");
    }
};

}  // namespace mpia
