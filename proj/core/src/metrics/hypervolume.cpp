#include "mpia/metrics/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpia/rng.hpp"

namespace mpia {

namespace {

/// Points strictly below the reference in every coordinate; others span no
/// volume.
std::vector<std::vector<double>> contributing(const std::vector<std::vector<double>>& points,
                                              const std::vector<double>& reference) {
    std::vector<std::vector<double>> kept;
    for (const auto& p : points) {
        if (p.size() != reference.size()) {
            throw std::invalid_argument("hypervolume: point dimension mismatch");
        }
        bool inside = true;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!(p[i] < reference[i])) {
                inside = false;
                break;
            }
        }
        if (inside) kept.push_back(p);
    }
    return kept;
}

double staircase_area(std::vector<std::vector<double>> pts, double ref_x, double ref_y) {
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });
    double area = 0.0;
    double best_y = ref_y;
    std::vector<std::pair<double, double>> stairs;
    for (const auto& p : pts) {
        if (p[1] >= best_y) continue;  // dominated within the sweep
        stairs.emplace_back(p[0], p[1]);
        best_y = p[1];
    }
    for (std::size_t i = 0; i < stairs.size(); ++i) {
        double right = i + 1 < stairs.size() ? stairs[i + 1].first : ref_x;
        area += (right - stairs[i].first) * (ref_y - stairs[i].second);
    }
    return area;
}

}  // namespace

double hypervolume_2d(const std::vector<std::vector<double>>& points,
                      const std::vector<double>& reference) {
    if (reference.size() != 2) throw std::invalid_argument("hypervolume_2d: need 2-D reference");
    return staircase_area(contributing(points, reference), reference[0], reference[1]);
}

double hypervolume_3d(const std::vector<std::vector<double>>& points,
                      const std::vector<double>& reference) {
    if (reference.size() != 3) throw std::invalid_argument("hypervolume_3d: need 3-D reference");
    auto pts = contributing(points, reference);
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(),
              [](const auto& a, const auto& b) { return a[2] < b[2]; });
    // Sweep slabs upward in z; each slab's cross-section is the 2-D staircase
    // of every point at or below it.
    double volume = 0.0;
    std::vector<std::vector<double>> active;
    std::size_t i = 0;
    while (i < pts.size()) {
        double z = pts[i][2];
        while (i < pts.size() && pts[i][2] == z) {
            active.push_back({pts[i][0], pts[i][1]});
            ++i;
        }
        double top = i < pts.size() ? pts[i][2] : reference[2];
        volume += staircase_area(active, reference[0], reference[1]) * (top - z);
    }
    return volume;
}

HvResult hypervolume_mc(const std::vector<std::vector<double>>& points,
                        const std::vector<double>& reference, std::size_t samples,
                        std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("hypervolume_mc: need samples");
    auto pts = contributing(points, reference);
    if (pts.empty()) return {0.0, 0.0};
    const std::size_t m = reference.size();
    std::vector<double> lo(m);
    for (std::size_t j = 0; j < m; ++j) {
        double v = pts[0][j];
        for (const auto& p : pts) v = std::min(v, p[j]);
        lo[j] = v;
    }
    double box = 1.0;
    for (std::size_t j = 0; j < m; ++j) box *= reference[j] - lo[j];
    if (box <= 0.0) return {0.0, 0.0};

    Rng rng(seed);
    std::vector<double> sample(m);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < m; ++j) sample[j] = rng.uniform(lo[j], reference[j]);
        for (const auto& p : pts) {
            bool covers = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (p[j] > sample[j]) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                ++hits;
                break;
            }
        }
    }
    double fraction = static_cast<double>(hits) / static_cast<double>(samples);
    double se = box * std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(samples));
    return {box * fraction, se};
}

HvResult hypervolume(const std::vector<std::vector<double>>& points,
                     const std::vector<double>& reference) {
    if (reference.empty()) throw std::invalid_argument("hypervolume: empty reference");
    switch (reference.size()) {
        case 1: {
            auto pts = contributing(points, reference);
            double best = 0.0;
            for (const auto& p : pts) best = std::max(best, reference[0] - p[0]);
            return {best, 0.0};
        }
        case 2: return {hypervolume_2d(points, reference), 0.0};
        case 3: return {hypervolume_3d(points, reference), 0.0};
        default: return hypervolume_mc(points, reference);
    }
}

}  // namespace mpia
