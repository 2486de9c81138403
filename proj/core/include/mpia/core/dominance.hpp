#ifndef MPIA_CORE_DOMINANCE_HPP
#define MPIA_CORE_DOMINANCE_HPP

#include <span>
#include <vector>

#include "mpia/core/types.hpp"

namespace mpia {

/// Pareto comparison of two objective vectors, minimization convention.
/// Equal vectors are Incomparable.
Dominance dominates(std::span<const double> a, std::span<const double> b);

/// Constrained-dominance comparison: a feasible point beats an infeasible
/// one, two infeasible points are ordered by total violation, and two
/// feasible points fall through to plain Pareto dominance.
Dominance dominates_constrained(std::span<const double> a, std::span<const double> b,
                                double violation_a, double violation_b);

/// Slice of an objective vector seen by party k, in stored index order.
std::vector<double> party_view(std::span<const double> objectives, std::size_t k,
                               const PartyScheme& scheme);

/// Pareto comparison restricted to party k's objectives. Both individuals
/// must be evaluated. Violations take part via the constrained rule; for
/// unconstrained problems both are zero and the rule reduces to dominates().
Dominance dominates_in_party(const Individual& a, const Individual& b, std::size_t k,
                             const PartyScheme& scheme);

}  // namespace mpia

#endif  // MPIA_CORE_DOMINANCE_HPP
