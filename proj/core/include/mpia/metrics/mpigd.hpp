#pragma once

#include <vector>

#include "mpia/core/types.hpp"

namespace mpia {

/// Sampled true multiparty Pareto front, in full objective coordinates.
struct ReferenceFront {
    std::vector<std::vector<double>> points;
};

/// Multiparty distance between two objective vectors: the per-party
/// Euclidean distances are summed, not folded into one global norm.
double multiparty_distance(const std::vector<double>& a, const std::vector<double>& b,
                           const PartyScheme& scheme);

/// Mean over the reference of the multiparty distance to the nearest
/// obtained point. Zero when the obtained set covers the reference.
double mpigd(const ReferenceFront& reference, const std::vector<std::vector<double>>& obtained,
             const PartyScheme& scheme);

}  // namespace mpia
