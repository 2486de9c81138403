#pragma once

// Shared builders for randomized suite inputs.

#include <cstddef>
#include <vector>

#include "mpia/core/types.hpp"
#include "mpia/rng.hpp"

namespace testutil {

/// Random party partition of `m` objectives: contiguous blocks, sizes 1..3,
/// with an occasional overlapping extra objective. Guarantees the library's
/// scheme invariants (first party gets at least two objectives when K >= 2).
inline std::vector<std::vector<std::size_t>> random_parties(mpia::Rng& rng, std::size_t parties,
                                                            std::size_t& m_out) {
    std::vector<std::vector<std::size_t>> result(parties);
    std::size_t next = 0;
    for (std::size_t k = 0; k < parties; ++k) {
        std::size_t size = 1 + rng.uniform_index(3);
        if (k == 0 && parties >= 2 && size < 2) size = 2;
        for (std::size_t j = 0; j < size; ++j) result[k].push_back(next++);
    }
    m_out = next;
    if (parties >= 2 && rng.uniform01() < 0.3) {
        // Overlap: the last party additionally sees one of the first party's
        // objectives.
        result[parties - 1].push_back(result[0][rng.uniform_index(result[0].size())]);
    }
    return result;
}

inline mpia::Population random_population(mpia::Rng& rng, std::size_t count, std::size_t m,
                                          bool with_violations = false) {
    mpia::Population population;
    population.members.resize(count);
    for (auto& ind : population.members) {
        ind.objectives.resize(m);
        for (auto& v : ind.objectives) v = rng.uniform(0.0, 1.0);
        if (with_violations && rng.uniform01() < 0.3) ind.violation = rng.uniform(0.1, 2.0);
    }
    return population;
}

inline std::vector<std::vector<double>> objectives_of(const mpia::Population& population) {
    std::vector<std::vector<double>> values;
    values.reserve(population.size());
    for (const auto& ind : population.members) values.push_back(ind.objectives);
    return values;
}

inline std::vector<double> violations_of(const mpia::Population& population) {
    std::vector<double> values;
    values.reserve(population.size());
    for (const auto& ind : population.members) values.push_back(ind.violation);
    return values;
}

}  // namespace testutil
