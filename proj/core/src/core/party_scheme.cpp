#include "mpia/core/types.hpp"

#include <stdexcept>

namespace mpia {

PartyScheme::PartyScheme(std::vector<std::vector<std::size_t>> parties,
                         std::size_t total_objectives)
    : parties_(std::move(parties)), total_objectives_(total_objectives) {
    if (parties_.size() < 2) {
        throw std::invalid_argument("PartyScheme: need at least 2 parties");
    }
    bool some_party_multi = false;
    std::vector<bool> covered(total_objectives_, false);
    for (const auto& set : parties_) {
        if (set.empty()) {
            throw std::invalid_argument("PartyScheme: empty objective set");
        }
        if (set.size() >= 2) some_party_multi = true;
        for (std::size_t idx : set) {
            if (idx >= total_objectives_) {
                throw std::invalid_argument("PartyScheme: objective index out of range");
            }
            covered[idx] = true;
        }
    }
    for (bool c : covered) {
        if (!c) throw std::invalid_argument("PartyScheme: union does not cover all objectives");
    }
    if (!some_party_multi) {
        throw std::invalid_argument("PartyScheme: at least one party needs >= 2 objectives");
    }
}

PartyScheme PartyScheme::single(std::size_t total_objectives) {
    if (total_objectives == 0) {
        throw std::invalid_argument("PartyScheme: need at least one objective");
    }
    PartyScheme s;
    std::vector<std::size_t> all(total_objectives);
    for (std::size_t i = 0; i < total_objectives; ++i) all[i] = i;
    s.parties_.push_back(std::move(all));
    s.total_objectives_ = total_objectives;
    return s;
}

}  // namespace mpia
