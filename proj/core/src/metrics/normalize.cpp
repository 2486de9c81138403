#include "mpia/metrics/normalize.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpia {

NormalizationBounds compute_bounds(const std::vector<std::vector<double>>& merged) {
    if (merged.empty()) throw std::invalid_argument("compute_bounds: empty merged set");
    const std::size_t m = merged.front().size();
    NormalizationBounds bounds;
    bounds.min.assign(m, 0.0);
    bounds.max.assign(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        double lo = merged.front()[j];
        double hi = merged.front()[j];
        for (const auto& p : merged) {
            if (p.size() != m) throw std::invalid_argument("compute_bounds: ragged vectors");
            lo = std::min(lo, p[j]);
            hi = std::max(hi, p[j]);
        }
        bounds.min[j] = lo;
        bounds.max[j] = hi;
    }
    return bounds;
}

std::vector<std::vector<double>> apply_normalization(const std::vector<std::vector<double>>& points,
                                                     const NormalizationBounds& bounds) {
    const std::size_t m = bounds.min.size();
    std::vector<std::vector<double>> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        if (p.size() != m) throw std::invalid_argument("apply_normalization: dimension mismatch");
        std::vector<double> q(m);
        for (std::size_t j = 0; j < m; ++j) {
            double range = bounds.max[j] - bounds.min[j];
            q[j] = range > 0.0 ? (p[j] - bounds.min[j]) / range : 0.0;
        }
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<double> party_hypervolumes(const std::vector<std::vector<double>>& objectives,
                                       const PartyScheme& scheme,
                                       const NormalizationBounds& bounds) {
    if (bounds.min.size() != scheme.total_objectives()) {
        throw std::invalid_argument("party_hypervolumes: bounds disagree with scheme");
    }
    std::vector<std::vector<double>> normalized = apply_normalization(objectives, bounds);
    std::vector<double> values(scheme.party_count(), 0.0);
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        const auto& owned = scheme.objectives_of(k);
        std::vector<std::vector<double>> slice;
        slice.reserve(normalized.size());
        for (const auto& p : normalized) {
            std::vector<double> v(owned.size());
            for (std::size_t j = 0; j < owned.size(); ++j) v[j] = p[owned[j]];
            slice.push_back(std::move(v));
        }
        values[k] = hypervolume(slice, std::vector<double>(owned.size(), 1.0)).value;
    }
    return values;
}

double sum_hv(const std::vector<std::vector<double>>& objectives, const PartyScheme& scheme,
              const NormalizationBounds& bounds) {
    std::vector<double> values = party_hypervolumes(objectives, scheme, bounds);
    double total = 0.0;
    for (double v : values) total += v;
    return total;
}

}  // namespace mpia
