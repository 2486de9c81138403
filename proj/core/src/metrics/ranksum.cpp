#include "mpia/metrics/ranksum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace mpia {

std::string rank_sum_label_name(RankSumLabel label) {
    switch (label) {
        case RankSumLabel::Better: return "better";
        case RankSumLabel::Worse: return "worse";
        case RankSumLabel::Similar: return "similar";
    }
    throw std::invalid_argument("rank_sum_label_name: unknown label");
}

RankSumResult rank_sum_test(std::span<const double> a, std::span<const double> b, double alpha,
                            bool smaller_is_better) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    if (na < 5 || nb < 5) throw std::invalid_argument("rank_sum_test: need at least 5 per sample");
    const std::size_t n = na + nb;

    struct Entry {
        double value;
        bool from_a;
    };
    std::vector<Entry> pooled;
    pooled.reserve(n);
    for (double v : a) pooled.push_back({v, true});
    for (double v : b) pooled.push_back({v, false});
    for (const Entry& e : pooled) {
        // Infinities rank fine; NaN has no rank and would also break the
        // sort's ordering contract.
        if (std::isnan(e.value)) throw std::invalid_argument("rank_sum_test: NaN sample");
    }
    std::sort(pooled.begin(), pooled.end(),
              [](const Entry& x, const Entry& y) { return x.value < y.value; });

    // Midranks; ties accumulate the variance correction term.
    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && pooled[j].value == pooled[i].value) ++j;
        double t = static_cast<double>(j - i);
        double midrank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].from_a) rank_sum_a += midrank;
        }
        tie_term += t * t * t - t;
        i = j;
    }

    double dn_a = static_cast<double>(na);
    double dn_b = static_cast<double>(nb);
    double dn = static_cast<double>(n);
    double u_a = rank_sum_a - dn_a * (dn_a + 1.0) / 2.0;
    double mean_u = dn_a * dn_b / 2.0;
    double variance =
        dn_a * dn_b / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));

    RankSumResult result;
    if (variance <= 0.0) {
        result.label = RankSumLabel::Similar;
        result.p_value = 1.0;
        result.z = 0.0;
        return result;
    }
    double diff = u_a - mean_u;
    double continuity = diff > 0.0 ? -0.5 : (diff < 0.0 ? 0.5 : 0.0);
    result.z = (diff + continuity) / std::sqrt(variance);
    result.p_value = std::min(1.0, std::erfc(std::abs(result.z) / std::sqrt(2.0)));

    if (result.p_value >= alpha) {
        result.label = RankSumLabel::Similar;
    } else {
        bool a_tends_smaller = diff < 0.0;
        bool a_better = a_tends_smaller == smaller_is_better;
        result.label = a_better ? RankSumLabel::Better : RankSumLabel::Worse;
    }
    return result;
}

}  // namespace mpia
