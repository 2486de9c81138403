#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mpia/core/types.hpp"

namespace mpia {

/// Clones in activation order plus the activation index each clone came from.
struct CloneList {
    std::vector<Individual> clones;
    std::vector<std::size_t> sources;
};

/// Convergence metric p_i = (max layer among the set) - layer_i.
std::vector<int> convergence_metric(std::span<const int> mp_layers);

/// Replaces infinite crowding distances by twice the largest finite one in
/// the set, or by 1.0 when no finite value exists.
std::vector<double> replace_infinite_crowding(std::span<const double> crowding);

/// counts[i] = ceil(n_clone * w_i / sum(w)) with w_i = crowding_i + p_i.
/// All-zero weights degrade to a uniform ceil(n_clone / nA) each. The total
/// lands in [n_clone, n_clone + nA].
std::vector<std::size_t> clone_counts(std::span<const double> crowding, std::span<const int> p,
                                      std::size_t n_clone);

/// Clones the first n_activate members of the sorted population according to
/// clone_counts, applying the infinite-crowding substitution first.
CloneList clone(const Population& sorted_population, std::size_t n_activate, std::size_t n_clone);

}  // namespace mpia
