#include "mpia/metrics/mpigd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace mpia {

double multiparty_distance(const std::vector<double>& a, const std::vector<double>& b,
                           const PartyScheme& scheme) {
    if (a.size() != scheme.total_objectives() || b.size() != scheme.total_objectives()) {
        throw std::invalid_argument("multiparty_distance: vector size disagrees with scheme");
    }
    double total = 0.0;
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        double sq = 0.0;
        for (std::size_t obj : scheme.objectives_of(k)) {
            double diff = a[obj] - b[obj];
            sq += diff * diff;
        }
        total += std::sqrt(sq);
    }
    return total;
}

double mpigd(const ReferenceFront& reference, const std::vector<std::vector<double>>& obtained,
             const PartyScheme& scheme) {
    if (reference.points.empty()) throw std::invalid_argument("mpigd: empty reference front");
    if (obtained.empty()) throw std::invalid_argument("mpigd: empty obtained set");
    double total = 0.0;
    for (const auto& v : reference.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : obtained) {
            best = std::min(best, multiparty_distance(v, s, scheme));
        }
        total += best;
    }
    return total / static_cast<double>(reference.points.size());
}

}  // namespace mpia
