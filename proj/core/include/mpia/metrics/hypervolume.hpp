#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace mpia {

struct HvResult {
    double value = 0.0;
    double standard_error = 0.0;  ///< 0 for the exact algorithms
};

/// Exact sweep over the 2-D dominated staircase (minimization).
double hypervolume_2d(const std::vector<std::vector<double>>& points,
                      const std::vector<double>& reference);

/// Exact 3-D slicing along the third objective.
double hypervolume_3d(const std::vector<std::vector<double>>& points,
                      const std::vector<double>& reference);

inline constexpr std::size_t kHvMonteCarloSamples = 100000;
inline constexpr std::uint64_t kHvMonteCarloSeed = 0x9e3779b97f4a7c15ULL;

/// Monte-Carlo estimate over the [componentwise-min, reference] box with a
/// fixed-seed stream, any dimension.
HvResult hypervolume_mc(const std::vector<std::vector<double>>& points,
                        const std::vector<double>& reference,
                        std::size_t samples = kHvMonteCarloSamples,
                        std::uint64_t seed = kHvMonteCarloSeed);

/// Dispatch: exact for two and three objectives, Monte-Carlo beyond. Points
/// not strictly below the reference in every coordinate are ignored; none
/// left means 0.
HvResult hypervolume(const std::vector<std::vector<double>>& points,
                     const std::vector<double>& reference);

}  // namespace mpia
