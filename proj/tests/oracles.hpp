#pragma once

// Independent reference implementations the test suites compare the library
// against. Everything here favors obviousness over speed: repeated peeling,
// bitmask inclusion-exclusion, exhaustive enumeration.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

bool dominates(const std::vector<double>& a, const std::vector<double>& b);
bool dominates_constrained(const std::vector<double>& a, const std::vector<double>& b,
                           double violation_a, double violation_b);

/// Repeated peel of the mutually non-dominated subset; 1-based layers.
/// Empty `violations` means plain dominance.
std::vector<int> peel_sort(const std::vector<std::vector<double>>& values,
                           const std::vector<double>& violations = {});

struct TwoRoundResult {
    std::vector<std::vector<int>> rows;  ///< per-individual party layers
    std::vector<int> mp_rank;
};

/// Two-round sort built on peel_sort only.
TwoRoundResult two_round_sort(const std::vector<std::vector<double>>& objectives,
                              const std::vector<double>& violations,
                              const std::vector<std::vector<std::size_t>>& parties);

/// Indices non-dominated within every party's slice.
std::vector<std::size_t> mps_filter(const std::vector<std::vector<double>>& objectives,
                                    const std::vector<double>& violations,
                                    const std::vector<std::vector<std::size_t>>& parties);

/// Exact dominated hypervolume via inclusion-exclusion over point subsets.
/// Intended for at most ~12 points.
double hv_inclusion_exclusion(const std::vector<std::vector<double>>& points,
                              const std::vector<double>& reference);

/// Exact two-sided Mann-Whitney p-value by enumerating every assignment of
/// the pooled midranks to group a. Intended for n + m <= 14.
double exact_ranksum_p(const std::vector<double>& a, const std::vector<double>& b);

/// Literal environmental-selection trace: admit whole mp layers, then drop
/// the least crowded members of the overflowing layer. Returns kept indices.
std::vector<std::size_t> literal_selection(const std::vector<int>& mp_ranks,
                                           const std::vector<double>& crowding,
                                           std::size_t n_keep);

std::string sha256_hex(const std::string& bytes);

}  // namespace oracle
