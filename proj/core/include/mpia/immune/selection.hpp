#pragma once

#include <cstddef>

#include "mpia/core/types.hpp"

namespace mpia {

/// Environmental selection: whole multiparty layers are admitted while the
/// population stays below n_keep, then the least crowded members of the last
/// admitted layer are dropped one by one. Expects the input in the sorting
/// module's total order, whose prefix realizes exactly that rule. A merged
/// population smaller than n_keep is returned whole.
Population selection(const Population& merged_sorted, std::size_t n_keep);

}  // namespace mpia
