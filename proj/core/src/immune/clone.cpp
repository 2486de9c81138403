#include "mpia/immune/clone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpia {

std::vector<int> convergence_metric(std::span<const int> mp_layers) {
    if (mp_layers.empty()) throw std::invalid_argument("convergence_metric: empty set");
    int max_layer = *std::max_element(mp_layers.begin(), mp_layers.end());
    std::vector<int> p(mp_layers.size());
    for (std::size_t i = 0; i < mp_layers.size(); ++i) p[i] = max_layer - mp_layers[i];
    return p;
}

std::vector<double> replace_infinite_crowding(std::span<const double> crowding) {
    double largest_finite = 0.0;
    bool any_finite = false;
    for (double c : crowding) {
        if (std::isfinite(c)) {
            largest_finite = std::max(largest_finite, c);
            any_finite = true;
        }
    }
    double substitute = any_finite ? 2.0 * largest_finite : 1.0;
    std::vector<double> out(crowding.begin(), crowding.end());
    for (double& c : out) {
        if (!std::isfinite(c)) c = substitute;
    }
    return out;
}

std::vector<std::size_t> clone_counts(std::span<const double> crowding, std::span<const int> p,
                                      std::size_t n_clone) {
    if (crowding.size() != p.size() || crowding.empty()) {
        throw std::invalid_argument("clone_counts: size mismatch or empty input");
    }
    if (n_clone == 0) throw std::invalid_argument("clone_counts: n_clone must be positive");
    const std::size_t n = crowding.size();
    std::vector<double> weights(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(crowding[i]) || crowding[i] < 0.0) {
            throw std::invalid_argument("clone_counts: crowding must be finite and nonnegative");
        }
        if (p[i] < 0) throw std::invalid_argument("clone_counts: negative convergence metric");
        weights[i] = crowding[i] + static_cast<double>(p[i]);
        total += weights[i];
    }
    std::vector<std::size_t> counts(n);
    if (total <= 0.0) {
        std::size_t uniform = (n_clone + n - 1) / n;
        std::fill(counts.begin(), counts.end(), uniform);
        return counts;
    }
    for (std::size_t i = 0; i < n; ++i) {
        counts[i] = static_cast<std::size_t>(
            std::ceil(static_cast<double>(n_clone) * weights[i] / total));
    }
    return counts;
}

CloneList clone(const Population& sorted_population, std::size_t n_activate, std::size_t n_clone) {
    if (n_activate == 0 || n_activate > sorted_population.size()) {
        throw std::invalid_argument("clone: activation size out of range");
    }
    std::vector<double> crowding(n_activate);
    std::vector<int> layers(n_activate);
    for (std::size_t i = 0; i < n_activate; ++i) {
        const auto& ind = sorted_population.members[i];
        if (ind.mp_rank < 1) throw std::invalid_argument("clone: population not sorted");
        crowding[i] = ind.crowding;
        layers[i] = ind.mp_rank;
    }
    std::vector<double> finite = replace_infinite_crowding(crowding);
    std::vector<int> p = convergence_metric(layers);
    std::vector<std::size_t> counts = clone_counts(finite, p, n_clone);

    CloneList list;
    for (std::size_t i = 0; i < n_activate; ++i) {
        for (std::size_t c = 0; c < counts[i]; ++c) {
            list.clones.push_back(sorted_population.members[i]);
            list.sources.push_back(i);
        }
    }
    return list;
}

}  // namespace mpia
