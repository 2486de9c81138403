#include "mpia/problems/grouped_mop.hpp"

#include <stdexcept>
#include <utility>

namespace mpia {

GroupedMop::GroupedMop(std::string name, std::vector<Objective> objectives, PartyScheme scheme,
                       std::vector<double> lower, std::vector<double> upper, PsSampler sampler)
    : name_(std::move(name)),
      objectives_(std::move(objectives)),
      scheme_(std::move(scheme)),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      sampler_(std::move(sampler)) {
    if (objectives_.size() != scheme_.total_objectives()) {
        throw std::invalid_argument("GroupedMop: objective count disagrees with scheme");
    }
    if (lower_.empty() || lower_.size() != upper_.size()) {
        throw std::invalid_argument("GroupedMop: inconsistent bounds");
    }
}

void GroupedMop::evaluate(Individual& individual) const {
    individual.objectives.resize(objectives_.size());
    for (std::size_t i = 0; i < objectives_.size(); ++i) {
        individual.objectives[i] = objectives_[i](individual.x);
    }
    individual.violation = 0.0;
}

std::vector<std::vector<double>> GroupedMop::sample_reference_front(std::size_t count,
                                                                    Rng& rng) const {
    (void)rng;
    if (!sampler_) throw std::logic_error(name_ + ": no analytic reference front");
    if (count == 0) throw std::invalid_argument("sample_reference_front: count must be positive");
    std::vector<std::vector<double>> front;
    front.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double position = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
        std::vector<double> x = sampler_(position);
        std::vector<double> objectives(objectives_.size());
        for (std::size_t j = 0; j < objectives_.size(); ++j) objectives[j] = objectives_[j](x);
        front.push_back(std::move(objectives));
    }
    return front;
}

GroupedMop make_shared_sphere(std::size_t dimension, const std::vector<std::size_t>& party_sizes) {
    if (dimension < 2) throw std::invalid_argument("make_shared_sphere: dimension must be >= 2");
    if (party_sizes.empty()) throw std::invalid_argument("make_shared_sphere: no parties");

    auto basin = [](std::span<const double> x) {
        double g = 0.0;
        for (std::size_t i = 1; i < x.size(); ++i) {
            double t = x[i] - 0.5;
            g += t * t;
        }
        return g;
    };

    std::vector<GroupedMop::Objective> objectives;
    std::vector<std::vector<std::size_t>> parties;
    std::size_t next = 0;
    for (std::size_t m : party_sizes) {
        if (m == 0 || m > 3) {
            throw std::invalid_argument("make_shared_sphere: party sizes must be 1..3");
        }
        std::vector<std::size_t> owned;
        for (std::size_t j = 0; j < m; ++j) {
            owned.push_back(next++);
            auto position = [m, j](double y) {
                if (m == 1) return 0.0;
                if (j == 0) return y;
                if (j == 1) return 1.0 - y;
                return 4.0 * y * (1.0 - y);
            };
            objectives.push_back([basin, position](std::span<const double> x) {
                return position(x[0]) + basin(x);
            });
        }
        parties.push_back(std::move(owned));
    }
    std::size_t total = next;
    PartyScheme scheme = parties.size() == 1 ? PartyScheme::single(total)
                                             : PartyScheme(std::move(parties), total);

    GroupedMop::PsSampler sampler = [dimension](double position) {
        std::vector<double> x(dimension, 0.5);
        x[0] = position;
        return x;
    };

    std::string name = "shared-sphere-d" + std::to_string(dimension) + "-k" +
                       std::to_string(party_sizes.size());
    return GroupedMop(std::move(name), std::move(objectives), std::move(scheme),
                      std::vector<double>(dimension, 0.0), std::vector<double>(dimension, 1.0),
                      std::move(sampler));
}

}  // namespace mpia
