#include "mpia/immune/selection.hpp"

#include <stdexcept>

namespace mpia {

Population selection(const Population& merged_sorted, std::size_t n_keep) {
    if (n_keep == 0) throw std::invalid_argument("selection: n_keep must be positive");
    Population next;
    next.generation = merged_sorted.generation;
    next.fe_count = merged_sorted.fe_count;
    const std::size_t n = merged_sorted.size();
    for (std::size_t i = 1; i < n; ++i) {
        const auto& prev = merged_sorted.members[i - 1];
        const auto& cur = merged_sorted.members[i];
        if (cur.mp_rank < prev.mp_rank ||
            (cur.mp_rank == prev.mp_rank && cur.crowding > prev.crowding)) {
            throw std::invalid_argument("selection: population not in sorted order");
        }
    }
    std::size_t take = n < n_keep ? n : n_keep;
    next.members.assign(merged_sorted.members.begin(),
                        merged_sorted.members.begin() + static_cast<std::ptrdiff_t>(take));
    return next;
}

}  // namespace mpia
