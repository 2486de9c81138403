#include "mpia/immune/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpia {

namespace {

void clamp_to_bounds(std::vector<double>& x, std::span<const double> lower,
                     std::span<const double> upper) {
    for (std::size_t j = 0; j < x.size(); ++j) x[j] = std::clamp(x[j], lower[j], upper[j]);
}

void check_bounds(std::size_t d, std::span<const double> lower, std::span<const double> upper) {
    if (lower.size() != d || upper.size() != d) {
        throw std::invalid_argument("variation: bounds dimension mismatch");
    }
}

}  // namespace

double p1_schedule(double t, double t_max) {
    if (t_max <= 0.0 || t < 0.0 || t > t_max) {
        throw std::invalid_argument("p1_schedule: need 0 <= t <= t_max, t_max > 0");
    }
    return 0.95 / (1.0 + std::exp(20.0 * t / t_max - 3.0));
}

double sbx_delta(double u, double eta) {
    double exponent = 1.0 / (eta + 1.0);
    if (u <= 0.5) return std::pow(2.0 * u, exponent);
    return std::pow(1.0 / (2.0 * (1.0 - u)), exponent);
}

std::vector<double> de_rand2bin(std::span<const double> base,
                                const std::vector<std::vector<double>>& pool,
                                std::span<const std::size_t> r, double cr, double f,
                                std::size_t forced_j, std::span<const double> lower,
                                std::span<const double> upper, Rng& rng) {
    const std::size_t d = base.size();
    check_bounds(d, lower, upper);
    if (r.size() != 4) throw std::invalid_argument("de_rand2bin: four donor indices required");
    std::vector<double> out(base.begin(), base.end());
    for (std::size_t j = 0; j < d; ++j) {
        bool cross = rng.uniform01() < cr;
        if (cross || j == forced_j) {
            out[j] = base[j] + f * (pool[r[0]][j] - pool[r[1]][j]) +
                     f * (pool[r[2]][j] - pool[r[3]][j]);
        }
    }
    clamp_to_bounds(out, lower, upper);
    return out;
}

std::vector<double> de_rand1bin(std::span<const double> base,
                                const std::vector<std::vector<double>>& pool,
                                std::span<const std::size_t> r, double cr, double f,
                                std::size_t forced_j, std::span<const double> lower,
                                std::span<const double> upper, Rng& rng) {
    const std::size_t d = base.size();
    check_bounds(d, lower, upper);
    if (r.size() != 2) throw std::invalid_argument("de_rand1bin: two donor indices required");
    std::vector<double> out(base.begin(), base.end());
    for (std::size_t j = 0; j < d; ++j) {
        bool cross = rng.uniform01() < cr;
        if (cross || j == forced_j) {
            out[j] = base[j] + f * (pool[r[0]][j] - pool[r[1]][j]);
        }
    }
    clamp_to_bounds(out, lower, upper);
    return out;
}

std::vector<double> guided_sbx(std::span<const double> base, std::span<const double> guide,
                               double pc, double eta, std::span<const double> lower,
                               std::span<const double> upper, Rng& rng) {
    const std::size_t d = base.size();
    check_bounds(d, lower, upper);
    if (guide.size() != d) throw std::invalid_argument("guided_sbx: guide dimension mismatch");
    std::vector<double> out(base.begin(), base.end());
    for (std::size_t j = 0; j < d; ++j) {
        if (rng.uniform01() >= pc) continue;
        double delta = sbx_delta(rng.uniform01(), eta);
        out[j] = 0.5 * ((1.0 + delta) * base[j] + (1.0 - delta) * guide[j]);
    }
    clamp_to_bounds(out, lower, upper);
    return out;
}

void polynomial_mutation(std::vector<double>& x, std::span<const double> lower,
                         std::span<const double> upper, double rate, double eta, Rng& rng) {
    const std::size_t d = x.size();
    check_bounds(d, lower, upper);
    double mut_pow = 1.0 / (eta + 1.0);
    for (std::size_t j = 0; j < d; ++j) {
        if (rng.uniform01() >= rate) continue;
        double range = upper[j] - lower[j];
        if (range <= 0.0) continue;
        double u = rng.uniform01();
        double delta_q;
        if (u < 0.5) {
            double xy = 1.0 - (x[j] - lower[j]) / range;
            double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
            delta_q = std::pow(val, mut_pow) - 1.0;
        } else {
            double xy = 1.0 - (upper[j] - x[j]) / range;
            double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
            delta_q = 1.0 - std::pow(val, mut_pow);
        }
        x[j] = std::clamp(x[j] + delta_q * range, lower[j], upper[j]);
    }
}

std::optional<std::size_t> find_guide(const Individual& clone, const Population& sorted_population,
                                      Rng& rng) {
    if (clone.mp_rank <= 1) return std::nullopt;
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < sorted_population.size(); ++i) {
        const auto& y = sorted_population.members[i];
        if (y.mp_rank >= clone.mp_rank) continue;
        bool party_match = false;
        for (std::size_t k = 0; k < clone.party_ranks.size(); ++k) {
            if (y.party_ranks[k] <= clone.party_ranks[k]) {
                party_match = true;
                break;
            }
        }
        if (party_match) candidates.push_back(i);
    }
    if (candidates.empty()) return std::nullopt;
    return candidates[rng.uniform_index(candidates.size())];
}

std::vector<Individual> adaptive_operator(const Population& sorted_population,
                                          std::size_t n_activate, const CloneList& clones,
                                          std::size_t t, std::size_t t_max,
                                          std::span<const double> lower,
                                          std::span<const double> upper,
                                          const OperatorConfig& config, bool guided_enabled,
                                          Rng& rng, VariationCounters* counters) {
    if (n_activate == 0 || n_activate > sorted_population.size()) {
        throw std::invalid_argument("adaptive_operator: activation size out of range");
    }
    if (clones.clones.size() != clones.sources.size()) {
        throw std::invalid_argument("adaptive_operator: clone list inconsistent");
    }
    const std::size_t d = lower.size();
    check_bounds(d, lower, upper);
    double p1 = p1_schedule(static_cast<double>(t), static_cast<double>(t_max));
    double per_var = 1.0 / static_cast<double>(d);

    std::vector<std::vector<double>> pool(n_activate);
    for (std::size_t i = 0; i < n_activate; ++i) pool[i] = sorted_population.members[i].x;

    std::vector<char> guided_done(n_activate, 0);
    std::vector<Individual> offspring;
    offspring.reserve(clones.clones.size());

    for (std::size_t c = 0; c < clones.clones.size(); ++c) {
        const Individual& source = clones.clones[c];
        std::size_t src_index = clones.sources[c];
        std::vector<double> child;

        auto apply_rand1bin = [&]() -> bool {
            if (n_activate < 3) return false;
            auto r = rng.distinct_indices(2, n_activate);
            std::size_t forced_j = rng.uniform_index(d);
            child = de_rand1bin(source.x, pool, r, config.cr2, config.f2, forced_j, lower,
                                upper, rng);
            if (counters) ++counters->op3;
            return true;
        };

        bool varied = false;
        bool pick_op1 = rng.uniform01() < p1;
        if (pick_op1) {
            if (n_activate >= 5) {
                auto r = rng.distinct_indices(4, n_activate);
                std::size_t forced_j = rng.uniform_index(d);
                child = de_rand2bin(source.x, pool, r, config.cr1, config.f1, forced_j, lower,
                                    upper, rng);
                if (counters) ++counters->op1;
                varied = true;
            }
            // Too few activated members: drop to rand/1/bin below.
        } else if (guided_enabled && source.mp_rank > 1 && !guided_done[src_index]) {
            auto guide = find_guide(source, sorted_population, rng);
            if (guide && rng.uniform01() < config.p2) {
                child = guided_sbx(source.x, sorted_population.members[*guide].x, per_var,
                                   config.sbx_index, lower, upper, rng);
                guided_done[src_index] = 1;
                if (counters) ++counters->op2;
                varied = true;
            }
        }
        if (!varied) varied = apply_rand1bin();
        if (!varied) {
            child.assign(source.x.begin(), source.x.end());
            if (counters) ++counters->mutation_only;
        }

        polynomial_mutation(child, lower, upper, per_var, config.pm_index, rng);

        Individual out;
        out.x = std::move(child);
        offspring.push_back(std::move(out));
    }
    return offspring;
}

}  // namespace mpia
