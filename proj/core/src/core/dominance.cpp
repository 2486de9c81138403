#include "mpia/core/dominance.hpp"

#include <cmath>
#include <stdexcept>

namespace mpia {

Dominance dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominates: objective vectors differ in length");
    }
    bool a_better = false;
    bool b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) {
            a_better = true;
        } else if (b[i] < a[i]) {
            b_better = true;
        }
        if (a_better && b_better) return Dominance::Incomparable;
    }
    if (a_better && !b_better) return Dominance::FirstDominates;
    if (b_better && !a_better) return Dominance::SecondDominates;
    return Dominance::Incomparable;
}

Dominance dominates_constrained(std::span<const double> a, std::span<const double> b,
                                double violation_a, double violation_b) {
    bool feas_a = violation_a <= 0.0;
    bool feas_b = violation_b <= 0.0;
    if (feas_a && !feas_b) return Dominance::FirstDominates;
    if (feas_b && !feas_a) return Dominance::SecondDominates;
    if (!feas_a && !feas_b) {
        if (violation_a < violation_b) return Dominance::FirstDominates;
        if (violation_b < violation_a) return Dominance::SecondDominates;
        return Dominance::Incomparable;
    }
    return dominates(a, b);
}

std::vector<double> party_view(std::span<const double> objectives, std::size_t k,
                               const PartyScheme& scheme) {
    const auto& indices = scheme.objectives_of(k);
    std::vector<double> view;
    view.reserve(indices.size());
    for (std::size_t idx : indices) view.push_back(objectives[idx]);
    return view;
}

Dominance dominates_in_party(const Individual& a, const Individual& b, std::size_t k,
                             const PartyScheme& scheme) {
    if (!a.evaluated() || !b.evaluated()) {
        throw std::invalid_argument("dominates_in_party: unevaluated individual");
    }
    std::vector<double> va = party_view(a.objectives, k, scheme);
    std::vector<double> vb = party_view(b.objectives, k, scheme);
    return dominates_constrained(va, vb, a.violation, b.violation);
}

}  // namespace mpia
