#pragma once

#include <span>
#include <string>

namespace mpia {

enum class RankSumLabel { Better, Worse, Similar };

std::string rank_sum_label_name(RankSumLabel label);

struct RankSumResult {
    RankSumLabel label = RankSumLabel::Similar;
    double p_value = 1.0;
    double z = 0.0;  ///< signed statistic, positive when a tends larger
};

/// Two-sided Mann-Whitney rank-sum test with midrank tie handling, normal
/// approximation, tie-corrected variance, and continuity correction.
/// `smaller_is_better` tells which direction counts as Better for sample a.
/// A pooled sample with no variance comes back Similar with p = 1.
RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b,
                            double alpha = 0.05, bool smaller_is_better = true);

}  // namespace mpia
