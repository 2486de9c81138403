#include "mpia/immune/activation.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mpia/core/dominance.hpp"
#include "mpia/sorting/nondominated.hpp"

namespace mpia {

void OperatorConfig::validate() const {
    auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
    if (!rate_ok(cr1) || !rate_ok(cr2) || !rate_ok(p2) || !rate_ok(mcm_threshold)) {
        throw std::invalid_argument("OperatorConfig: rates must lie in [0,1]");
    }
    if (f1 <= 0.0 || f2 <= 0.0) throw std::invalid_argument("OperatorConfig: scale factors must be positive");
    if (sbx_index <= 0.0 || pm_index <= 0.0) {
        throw std::invalid_argument("OperatorConfig: distribution indices must be positive");
    }
    if (activate_num_list.empty()) throw std::invalid_argument("OperatorConfig: empty activation list");
    for (std::size_t i = 1; i < activate_num_list.size(); ++i) {
        if (activate_num_list[i] <= activate_num_list[i - 1]) {
            throw std::invalid_argument("OperatorConfig: activation list must be strictly increasing");
        }
    }
    if (activate_num_list.front() == 0) {
        throw std::invalid_argument("OperatorConfig: activation sizes must be positive");
    }
}

std::vector<std::vector<std::size_t>> party_first_fronts(const Population& population,
                                                         const PartyScheme& scheme) {
    const std::size_t n = population.size();
    if (n == 0) throw std::invalid_argument("party_first_fronts: empty population");
    std::vector<double> violations(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!population.members[i].evaluated()) {
            throw std::invalid_argument("party_first_fronts: unevaluated individual");
        }
        violations[i] = population.members[i].violation;
    }
    std::vector<std::vector<std::size_t>> fronts(scheme.party_count());
    std::vector<std::vector<double>> slice(n);
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            slice[i] = party_view(population.members[i].objectives, k, scheme);
        }
        std::vector<int> layers = fast_nondominated_sort(slice, violations);
        for (std::size_t i = 0; i < n; ++i) {
            if (layers[i] == 1) fronts[k].push_back(i);
        }
    }
    return fronts;
}

double cover_metric(const Population& population, std::span<const std::size_t> a,
                    std::span<const std::size_t> front, std::size_t party,
                    const PartyScheme& scheme) {
    if (a.empty() || front.empty()) throw std::invalid_argument("cover_metric: empty set");
    double cm = 1.0;
    for (std::size_t obj : scheme.objectives_of(party)) {
        double a_lo = std::numeric_limits<double>::infinity();
        double a_hi = -a_lo;
        for (std::size_t i : a) {
            double v = population.members[i].objectives[obj];
            a_lo = std::min(a_lo, v);
            a_hi = std::max(a_hi, v);
        }
        double b_lo = std::numeric_limits<double>::infinity();
        double b_hi = -b_lo;
        for (std::size_t i : front) {
            double v = population.members[i].objectives[obj];
            b_lo = std::min(b_lo, v);
            b_hi = std::max(b_hi, v);
        }
        double b_range = b_hi - b_lo;
        double term = b_range <= 0.0 ? 1.0 : (a_hi - a_lo) / b_range;
        cm = std::min(cm, term);
    }
    return std::clamp(cm, 0.0, 1.0);
}

double multiparty_cover_metric(const Population& population, std::span<const std::size_t> a,
                               const std::vector<std::vector<std::size_t>>& fronts,
                               const PartyScheme& scheme, std::size_t* calls) {
    if (fronts.size() != scheme.party_count()) {
        throw std::invalid_argument("multiparty_cover_metric: one front per party required");
    }
    double mcm = 1.0;
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        if (calls) ++*calls;
        mcm = std::min(mcm, cover_metric(population, a, fronts[k], k, scheme));
    }
    return mcm;
}

ActivationSet adaptive_activation(const Population& sorted_population, const PartyScheme& scheme,
                                  const OperatorConfig& config, std::size_t* calls) {
    config.validate();
    const std::size_t n = sorted_population.size();
    std::vector<std::size_t> candidates;
    for (std::size_t size : config.activate_num_list) {
        if (size <= n) candidates.push_back(size);
    }
    if (candidates.empty()) {
        throw std::invalid_argument("adaptive_activation: population smaller than every listed size");
    }
    auto fronts = party_first_fronts(sorted_population, scheme);
    std::vector<std::size_t> prefix;
    prefix.reserve(candidates.back());
    ActivationSet result;
    for (std::size_t size : candidates) {
        while (prefix.size() < size) prefix.push_back(prefix.size());
        result.size = size;
        result.achieved_mcm =
            multiparty_cover_metric(sorted_population, prefix, fronts, scheme, calls);
        if (result.achieved_mcm > config.mcm_threshold) break;
    }
    // Falls through with the largest candidate when no size clears the bar.
    return result;
}

}  // namespace mpia
