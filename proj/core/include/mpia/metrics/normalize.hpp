#pragma once

#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/metrics/hypervolume.hpp"

namespace mpia {

/// Componentwise extremes of a merged solution set; the affine map they
/// define sends the set into [0,1] per objective.
struct NormalizationBounds {
    std::vector<double> min;
    std::vector<double> max;
};

NormalizationBounds compute_bounds(const std::vector<std::vector<double>>& merged);

/// Applies the affine map. An objective with zero range maps to 0.
std::vector<std::vector<double>> apply_normalization(const std::vector<std::vector<double>>& points,
                                                     const NormalizationBounds& bounds);

/// Hypervolume of each party's normalized objective slice against the
/// all-ones reference, in party order.
std::vector<double> party_hypervolumes(const std::vector<std::vector<double>>& objectives,
                                       const PartyScheme& scheme,
                                       const NormalizationBounds& bounds);

/// Sum over parties of the hypervolume of the normalized party-view slice
/// against the all-ones reference.
double sum_hv(const std::vector<std::vector<double>>& objectives, const PartyScheme& scheme,
              const NormalizationBounds& bounds);

}  // namespace mpia
