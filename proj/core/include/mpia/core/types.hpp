#ifndef MPIA_CORE_TYPES_HPP
#define MPIA_CORE_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace mpia {

/// Result of a pairwise Pareto comparison.
enum class Dominance {
    FirstDominates,
    SecondDominates,
    Incomparable,
};

/// Maps K decision makers to the objective indices each one owns.
///
/// Index sets may overlap; the union must cover every objective. At least
/// two parties, and at least one party with two or more objectives.
class PartyScheme {
public:
    PartyScheme(std::vector<std::vector<std::size_t>> parties, std::size_t total_objectives);

    /// Single-DM scheme owning all objectives. Degenerate on purpose: used by
    /// ordinary MOP wrappers, so the two-party invariant is not enforced here.
    static PartyScheme single(std::size_t total_objectives);

    [[nodiscard]] std::size_t party_count() const { return parties_.size(); }
    [[nodiscard]] std::size_t total_objectives() const { return total_objectives_; }
    [[nodiscard]] const std::vector<std::size_t>& objectives_of(std::size_t k) const {
        return parties_.at(k);
    }

private:
    PartyScheme() = default;

    std::vector<std::vector<std::size_t>> parties_;
    std::size_t total_objectives_ = 0;
};

/// One candidate solution: decision vector plus cached evaluation and ranks.
struct Individual {
    std::vector<double> x;
    std::vector<double> objectives;  ///< empty until evaluated
    double violation = 0.0;          ///< total constraint violation, 0 = feasible
    std::vector<int> party_ranks;    ///< 1-based per-DM layer, filled by sorting
    int mp_rank = 0;                 ///< 1-based multiparty layer, 0 = unsorted
    double crowding = 0.0;

    [[nodiscard]] bool evaluated() const { return !objectives.empty(); }
};

constexpr double kInfiniteCrowding = std::numeric_limits<double>::infinity();

/// Ordered population with the shared evaluation budget counter.
struct Population {
    std::vector<Individual> members;
    int generation = 0;
    std::uint64_t fe_count = 0;

    [[nodiscard]] std::size_t size() const { return members.size(); }
};

}  // namespace mpia

#endif  // MPIA_CORE_TYPES_HPP
