#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/immune/config.hpp"

namespace mpia {

/// Result of the activation step: the first `size` individuals of the sorted
/// population form the activation set.
struct ActivationSet {
    std::size_t size = 0;
    double achieved_mcm = 0.0;
};

/// Index lists of the per-party first fronts, computed from scratch on the
/// given population (cached ranks are ignored; they may refer to a larger
/// merged population).
std::vector<std::vector<std::size_t>> party_first_fronts(const Population& population,
                                                         const PartyScheme& scheme);

/// Coverage of party k's front by the set A: the worst per-objective range
/// ratio range_A(f_i) / range_B(f_i) over i in party k, clamped to [0,1].
/// A term with zero front range counts as 1.
double cover_metric(const Population& population, std::span<const std::size_t> a,
                    std::span<const std::size_t> front, std::size_t party,
                    const PartyScheme& scheme);

/// Minimum of cover_metric over all parties. `fronts` must hold one index
/// list per party, as produced by party_first_fronts. `calls`, when given,
/// is incremented once per cover_metric evaluation.
double multiparty_cover_metric(const Population& population, std::span<const std::size_t> a,
                               const std::vector<std::vector<std::size_t>>& fronts,
                               const PartyScheme& scheme, std::size_t* calls = nullptr);

/// Picks the smallest listed activation size whose prefix of the sorted
/// population reaches MCM > threshold; if none qualifies, the largest listed
/// size is used. List entries exceeding the population size are skipped so
/// small populations still activate.
ActivationSet adaptive_activation(const Population& sorted_population, const PartyScheme& scheme,
                                  const OperatorConfig& config, std::size_t* calls = nullptr);

}  // namespace mpia
