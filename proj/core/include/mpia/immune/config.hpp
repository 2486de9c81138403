#pragma once

#include <cstddef>
#include <vector>

namespace mpia {

/// Tuning knobs for activation and the variation operators.
///
/// The per-variable crossover rate of the guided operator and the polynomial
/// mutation rate are both 1/d and therefore depend on the problem dimension;
/// they are computed at the call site rather than stored here.
struct OperatorConfig {
    double cr1 = 0.9;  ///< crossover rate of the rand/2/bin operator
    double f1 = 0.7;   ///< scale factor of the rand/2/bin operator
    double cr2 = 0.5;  ///< crossover rate of the rand/1/bin operator
    double f2 = 0.5;   ///< scale factor of the rand/1/bin operator
    double p2 = 0.6;   ///< per-attempt probability of the guided crossover
    double sbx_index = 20.0;
    double pm_index = 20.0;
    double mcm_threshold = 0.99;
    std::vector<std::size_t> activate_num_list{20, 30, 40, 50, 60, 70};

    /// Throws std::invalid_argument if rates leave [0,1], an index is not
    /// positive, or the activation list is empty or not strictly increasing.
    void validate() const;
};

}  // namespace mpia
