#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mpia/problems/problem.hpp"

namespace mpia {

/// Wraps arbitrary objective closures into a party-grouped problem, with an
/// optional sampler of the analytic common Pareto set for MPIGD.
class GroupedMop : public Problem {
public:
    using Objective = std::function<double(std::span<const double>)>;
    /// Returns a decision vector on the common Pareto set.
    using PsSampler = std::function<std::vector<double>(double position)>;

    GroupedMop(std::string name, std::vector<Objective> objectives, PartyScheme scheme,
               std::vector<double> lower, std::vector<double> upper, PsSampler sampler = nullptr);

    std::string name() const override { return name_; }
    std::size_t dimension() const override { return lower_.size(); }
    const PartyScheme& scheme() const override { return scheme_; }
    const std::vector<double>& lower_bounds() const override { return lower_; }
    const std::vector<double>& upper_bounds() const override { return upper_; }
    void evaluate(Individual& individual) const override;

    bool has_reference_front() const override { return static_cast<bool>(sampler_); }
    /// Evenly spaced sample of the common front; the rng parameter is unused.
    std::vector<std::vector<double>> sample_reference_front(std::size_t count,
                                                            Rng& rng) const override;

private:
    std::string name_;
    std::vector<Objective> objectives_;
    PartyScheme scheme_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    PsSampler sampler_;
};

/// Shared-sphere family on [0,1]^d: every objective is a function of the
/// shared position variable y = x[0] plus the basin g = sum_{i>=1}
/// (x_i - 1/2)^2, so the common Pareto set is {x : x_i = 0.5 for i >= 1}
/// with y free. A party with one objective gets plain g; two objectives get
/// (y + g, 1 - y + g); three add 4y(1-y) + g. Parties with more than three
/// objectives are rejected.
GroupedMop make_shared_sphere(std::size_t dimension, const std::vector<std::size_t>& party_sizes);

}  // namespace mpia
