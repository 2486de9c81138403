#include "mpia/sorting/nondominated.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mpia/core/dominance.hpp"

namespace mpia {

namespace {

std::vector<int> fast_sort_impl(const std::vector<std::vector<double>>& values,
                                const std::vector<double>* violations) {
    const std::size_t n = values.size();
    if (n == 0) throw std::invalid_argument("fast_nondominated_sort: empty input");
    for (const auto& v : values) {
        if (v.size() != values.front().size()) {
            throw std::invalid_argument("fast_nondominated_sort: ragged objective vectors");
        }
    }

    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<int> domination_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Dominance d = violations
                              ? dominates_constrained(values[i], values[j], (*violations)[i],
                                                      (*violations)[j])
                              : dominates(values[i], values[j]);
            if (d == Dominance::FirstDominates) {
                dominated_by[i].push_back(j);
                ++domination_count[j];
            } else if (d == Dominance::SecondDominates) {
                dominated_by[j].push_back(i);
                ++domination_count[i];
            }
        }
    }

    std::vector<int> layer(n, 0);
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < n; ++i) {
        if (domination_count[i] == 0) {
            layer[i] = 1;
            front.push_back(i);
        }
    }
    int current = 1;
    while (!front.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : front) {
            for (std::size_t j : dominated_by[i]) {
                if (--domination_count[j] == 0) {
                    layer[j] = current + 1;
                    next.push_back(j);
                }
            }
        }
        ++current;
        front = std::move(next);
    }
    return layer;
}

}  // namespace

std::vector<int> fast_nondominated_sort(const std::vector<std::vector<double>>& values) {
    return fast_sort_impl(values, nullptr);
}

std::vector<int> fast_nondominated_sort(const std::vector<std::vector<double>>& values,
                                        const std::vector<double>& violations) {
    if (violations.size() != values.size()) {
        throw std::invalid_argument("fast_nondominated_sort: violation count mismatch");
    }
    return fast_sort_impl(values, &violations);
}

RankMatrix mpnds2(Population& population, const PartyScheme& scheme) {
    const std::size_t n = population.size();
    const std::size_t parties = scheme.party_count();
    if (n == 0) throw std::invalid_argument("mpnds2: empty population");

    RankMatrix ranks(n, parties);
    std::vector<double> violations(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!population.members[i].evaluated()) {
            throw std::invalid_argument("mpnds2: unevaluated individual");
        }
        violations[i] = population.members[i].violation;
    }

    // Round 1: ordinary sorting inside each party's objective slice.
    std::vector<std::vector<double>> slice(n);
    for (std::size_t k = 0; k < parties; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            slice[i] = party_view(population.members[i].objectives, k, scheme);
        }
        std::vector<int> layers = fast_nondominated_sort(slice, violations);
        for (std::size_t i = 0; i < n; ++i) ranks.at(i, k) = layers[i];
    }

    // Round 2: the layer vectors themselves become the objectives.
    std::vector<std::vector<double>> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = ranks.row_as_doubles(i);
    std::vector<int> mp_layers = fast_nondominated_sort(rows);

    for (std::size_t i = 0; i < n; ++i) {
        auto& ind = population.members[i];
        ind.party_ranks.assign(parties, 0);
        for (std::size_t k = 0; k < parties; ++k) ind.party_ranks[k] = ranks.at(i, k);
        ind.mp_rank = mp_layers[i];
    }
    return ranks;
}

std::vector<double> crowding_distance(const std::vector<std::vector<double>>& values,
                                      const std::vector<int>& layers) {
    const std::size_t n = values.size();
    if (layers.size() != n) throw std::invalid_argument("crowding_distance: size mismatch");
    std::vector<double> crowd(n, 0.0);
    if (n == 0) return crowd;
    const std::size_t m = values.front().size();

    int max_layer = *std::max_element(layers.begin(), layers.end());
    for (int l = 1; l <= max_layer; ++l) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (layers[i] == l) idx.push_back(i);
        }
        if (idx.empty()) continue;
        if (idx.size() <= 2) {
            for (std::size_t i : idx) crowd[i] = kInfiniteCrowding;
            continue;
        }
        for (std::size_t obj = 0; obj < m; ++obj) {
            std::vector<std::size_t> order = idx;
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return values[a][obj] < values[b][obj];
            });
            double lo = values[order.front()][obj];
            double hi = values[order.back()][obj];
            crowd[order.front()] = kInfiniteCrowding;
            crowd[order.back()] = kInfiniteCrowding;
            if (hi <= lo) continue;  // zero range contributes nothing
            for (std::size_t p = 1; p + 1 < order.size(); ++p) {
                if (crowd[order[p]] == kInfiniteCrowding) continue;
                crowd[order[p]] +=
                    (values[order[p + 1]][obj] - values[order[p - 1]][obj]) / (hi - lo);
            }
        }
    }
    return crowd;
}

void sort_population(Population& population) {
    const std::size_t n = population.size();
    if (n == 0) return;
    std::vector<std::vector<double>> values(n);
    std::vector<int> layers(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = population.members[i].objectives;
        layers[i] = population.members[i].mp_rank;
        if (layers[i] < 1) throw std::invalid_argument("sort_population: run mpnds2 first");
    }
    std::vector<double> crowd = crowding_distance(values, layers);
    for (std::size_t i = 0; i < n; ++i) population.members[i].crowding = crowd[i];

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& ia = population.members[a];
        const auto& ib = population.members[b];
        if (ia.mp_rank != ib.mp_rank) return ia.mp_rank < ib.mp_rank;
        if (ia.crowding != ib.crowding) return ia.crowding > ib.crowding;
        return a < b;
    });
    std::vector<Individual> sorted;
    sorted.reserve(n);
    for (std::size_t i : order) sorted.push_back(std::move(population.members[i]));
    population.members = std::move(sorted);
}

std::vector<std::size_t> multiparty_pareto_filter(const Population& population,
                                                  const PartyScheme& scheme) {
    const std::size_t n = population.size();
    if (n == 0) return {};
    std::vector<double> violations(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!population.members[i].evaluated()) {
            throw std::invalid_argument("multiparty_pareto_filter: unevaluated individual");
        }
        violations[i] = population.members[i].violation;
    }
    std::vector<bool> keep(n, true);
    std::vector<std::vector<double>> slice(n);
    for (std::size_t k = 0; k < scheme.party_count(); ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            slice[i] = party_view(population.members[i].objectives, k, scheme);
        }
        std::vector<int> layers = fast_nondominated_sort(slice, violations);
        for (std::size_t i = 0; i < n; ++i) {
            if (layers[i] != 1) keep[i] = false;
        }
    }
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) result.push_back(i);
    }
    return result;
}

}  // namespace mpia
