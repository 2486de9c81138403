#ifndef MPIA_SORTING_NONDOMINATED_HPP
#define MPIA_SORTING_NONDOMINATED_HPP

#include <cstddef>
#include <vector>

#include "mpia/core/types.hpp"

namespace mpia {

/// Per-party layer table: L(i, k) is the 1-based non-dominated layer of
/// individual i from the k-th DM's perspective.
class RankMatrix {
public:
    RankMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    int& at(std::size_t i, std::size_t k) { return data_[i * cols_ + k]; }
    [[nodiscard]] int at(std::size_t i, std::size_t k) const { return data_[i * cols_ + k]; }

    [[nodiscard]] std::vector<double> row_as_doubles(std::size_t i) const {
        std::vector<double> r(cols_);
        for (std::size_t k = 0; k < cols_; ++k) r[k] = static_cast<double>(at(i, k));
        return r;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<int> data_;
};

/// Fast non-dominated sorting (Deb's O(N^2 M) bookkeeping). Returns the
/// 1-based layer of every point; layer 1 is the global non-dominated set.
std::vector<int> fast_nondominated_sort(const std::vector<std::vector<double>>& values);

/// Same, under constrained dominance with per-point total violations.
std::vector<int> fast_nondominated_sort(const std::vector<std::vector<double>>& values,
                                        const std::vector<double>& violations);

/// Two-round multiparty sorting. Round 1 ranks each party's objective
/// slices; round 2 ranks the resulting layer vectors (minimizing layers).
/// Fills party_ranks and mp_rank on every member and returns the layer table.
RankMatrix mpnds2(Population& population, const PartyScheme& scheme);

/// Classic per-layer crowding distance over the full objective vectors.
/// Boundary points get +inf; an objective with zero range contributes 0.
std::vector<double> crowding_distance(const std::vector<std::vector<double>>& values,
                                      const std::vector<int>& layers);

/// Recomputes crowding over full objective vectors per mp_rank layer and
/// orders members by (mp_rank asc, crowding desc, original index). This is
/// the total order activation prefixes and selection slices rely on.
void sort_population(Population& population);

/// Indices of the individuals that are non-dominated within the population
/// for every party. Computed from scratch; does not require prior sorting.
std::vector<std::size_t> multiparty_pareto_filter(const Population& population,
                                                  const PartyScheme& scheme);

}  // namespace mpia

#endif  // MPIA_SORTING_NONDOMINATED_HPP
