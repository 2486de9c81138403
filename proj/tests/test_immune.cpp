#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "helpers.hpp"
#include "mpia/immune/activation.hpp"
#include "mpia/immune/clone.hpp"
#include "mpia/immune/selection.hpp"
#include "mpia/immune/variation.hpp"
#include "mpia/sorting/nondominated.hpp"
#include "oracles.hpp"

using mpia::OperatorConfig;
using mpia::PartyScheme;
using mpia::Population;

namespace {

const PartyScheme kBiparty({{0, 1}, {2, 3}}, 4);

/// Party-1 ranges spread over all five members, party-2 front = first three.
Population fig_population() {
    Population population;
    const std::vector<std::vector<double>> rows = {
        {0.0, 4.0, 0.0, 2.0}, {1.0, 3.0, 1.0, 1.0}, {2.0, 2.0, 2.0, 0.0},
        {3.0, 1.0, 2.0, 2.0}, {4.0, 0.0, 3.0, 3.0},
    };
    for (const auto& row : rows) {
        mpia::Individual ind;
        ind.objectives = row;
        population.members.push_back(ind);
    }
    return population;
}

Population sorted_random_population(mpia::Rng& rng, std::size_t n, std::size_t m = 4) {
    auto population = testutil::random_population(rng, n, m);
    mpia::mpnds2(population, kBiparty);
    mpia::sort_population(population);
    return population;
}

std::vector<std::size_t> iota_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
}

}  // namespace

TEST_SUITE_BEGIN("immune");

TEST_CASE("cover metric basics") {
    Population population = fig_population();
    auto fronts = mpia::party_first_fronts(population, kBiparty);
    REQUIRE(fronts[0] == iota_indices(5));
    REQUIRE(fronts[1] == std::vector<std::size_t>{0, 1, 2});

    std::vector<std::size_t> a{0, 1, 2};
    SUBCASE("set equal to the front covers it fully") {
        CHECK(mpia::cover_metric(population, a, fronts[1], 1, kBiparty) == doctest::Approx(1.0));
    }
    SUBCASE("narrow set covers a wide front partially") {
        // Range 2 out of 4 in both party-1 objectives.
        CHECK(mpia::cover_metric(population, a, fronts[0], 0, kBiparty) == doctest::Approx(0.5));
    }
    SUBCASE("singleton has zero ranges") {
        std::vector<std::size_t> one{2};
        CHECK(mpia::cover_metric(population, one, fronts[0], 0, kBiparty) == doctest::Approx(0.0));
    }
    SUBCASE("empty sets are rejected") {
        std::vector<std::size_t> none;
        CHECK_THROWS(mpia::cover_metric(population, none, fronts[0], 0, kBiparty));
        CHECK_THROWS(mpia::cover_metric(population, a, none, 0, kBiparty));
    }
    SUBCASE("zero front range counts as covered") {
        Population flat;
        for (int i = 0; i < 3; ++i) {
            mpia::Individual ind;
            ind.objectives = {static_cast<double>(i), 1.0, static_cast<double>(-i), 7.0};
            flat.members.push_back(ind);
        }
        // Hand-picked reference set: zero range in objective 1, so only
        // objective 0 decides the ratio.
        std::vector<std::size_t> front{0, 1, 2};
        std::vector<std::size_t> sub{0, 1};
        CHECK(mpia::cover_metric(flat, sub, front, 0, kBiparty) == doctest::Approx(0.5));
    }
}

TEST_CASE("multiparty cover metric takes the minimum and counts calls") {
    Population population = fig_population();
    auto fronts = mpia::party_first_fronts(population, kBiparty);
    std::vector<std::size_t> a{0, 1, 2};
    std::size_t calls = 0;
    double mcm = mpia::multiparty_cover_metric(population, a, fronts, kBiparty, &calls);
    CHECK(mcm == doctest::Approx(0.5));
    CHECK(calls == 2);

    std::size_t whole_calls = 0;
    double whole = mpia::multiparty_cover_metric(population, iota_indices(5), fronts, kBiparty,
                                                 &whole_calls);
    CHECK(whole == doctest::Approx(1.0));
}

TEST_CASE("MCM is monotone over sorted prefixes") {
    mpia::Rng rng(201);
    for (int trial = 0; trial < 10; ++trial) {
        auto population = sorted_random_population(rng, 80);
        auto fronts = mpia::party_first_fronts(population, kBiparty);
        auto all = iota_indices(population.size());
        double previous = 0.0;
        for (std::size_t size = 10; size <= 80; size += 10) {
            std::span<const std::size_t> prefix(all.data(), size);
            double mcm = mpia::multiparty_cover_metric(population, prefix, fronts, kBiparty);
            CHECK(mcm >= previous - 1e-12);
            previous = mcm;
        }
    }
}

TEST_CASE("adaptive activation picks the smallest passing listed size") {
    mpia::Rng rng(202);
    OperatorConfig config;
    for (int trial = 0; trial < 10; ++trial) {
        auto population = sorted_random_population(rng, 105);
        std::size_t calls = 0;
        auto activation = mpia::adaptive_activation(population, kBiparty, config, &calls);
        CHECK(calls > 0);

        // Independent prefix scan.
        auto fronts = mpia::party_first_fronts(population, kBiparty);
        auto all = iota_indices(population.size());
        std::size_t expected = config.activate_num_list.back();
        double expected_mcm = 0.0;
        for (std::size_t candidate : config.activate_num_list) {
            std::span<const std::size_t> prefix(all.data(), candidate);
            double mcm = mpia::multiparty_cover_metric(population, prefix, fronts, kBiparty);
            expected_mcm = mcm;
            if (mcm > config.mcm_threshold) {
                expected = candidate;
                break;
            }
        }
        CHECK(activation.size == expected);
        CHECK(activation.achieved_mcm == doctest::Approx(expected_mcm));
    }
}

TEST_CASE("adaptive activation corner rules") {
    mpia::Rng rng(203);
    OperatorConfig config;

    SUBCASE("threshold nobody reaches falls back to the largest listed size") {
        config.mcm_threshold = 1.0;  // MCM is clamped to [0,1], never above
        auto population = sorted_random_population(rng, 105);
        auto activation = mpia::adaptive_activation(population, kBiparty, config);
        CHECK(activation.size == config.activate_num_list.back());
    }
    SUBCASE("list entries beyond the population are skipped") {
        auto population = sorted_random_population(rng, 25);
        auto activation = mpia::adaptive_activation(population, kBiparty, config);
        CHECK(activation.size == 20);
    }
    SUBCASE("population below the smallest listed size is rejected") {
        auto population = sorted_random_population(rng, 10);
        CHECK_THROWS(mpia::adaptive_activation(population, kBiparty, config));
    }
    SUBCASE("trivial threshold accepts the first candidate") {
        config.mcm_threshold = 0.0;
        auto population = sorted_random_population(rng, 105);
        auto activation = mpia::adaptive_activation(population, kBiparty, config);
        CHECK(activation.size == 20);
    }
}

TEST_CASE("convergence metric") {
    CHECK(mpia::convergence_metric(std::vector<int>{1, 1, 2, 3}) ==
          std::vector<int>{2, 2, 1, 0});
    CHECK(mpia::convergence_metric(std::vector<int>{4, 4, 4}) == std::vector<int>{0, 0, 0});
    CHECK(mpia::convergence_metric(std::vector<int>{1, 5}) == std::vector<int>{4, 0});
}

TEST_CASE("infinite crowding substitution") {
    const double inf = mpia::kInfiniteCrowding;
    CHECK(mpia::replace_infinite_crowding(std::vector<double>{inf, 2.0, 1.0}) ==
          std::vector<double>{4.0, 2.0, 1.0});
    CHECK(mpia::replace_infinite_crowding(std::vector<double>{inf, inf}) ==
          std::vector<double>{1.0, 1.0});
    CHECK(mpia::replace_infinite_crowding(std::vector<double>{0.5, 0.25}) ==
          std::vector<double>{0.5, 0.25});
}

TEST_CASE("clone counts follow the ceiling shares") {
    using counts = std::vector<std::size_t>;
    CHECK(mpia::clone_counts(std::vector<double>{1.0, 1.0}, std::vector<int>{0, 0}, 10) ==
          counts{5, 5});
    CHECK(mpia::clone_counts(std::vector<double>{3.0, 1.0}, std::vector<int>{0, 0}, 8) ==
          counts{6, 2});
    CHECK(mpia::clone_counts(std::vector<double>{1.0, 1.0, 1.0}, std::vector<int>{0, 0, 0}, 10) ==
          counts{4, 4, 4});
    CHECK(mpia::clone_counts(std::vector<double>{0.0, 0.0}, std::vector<int>{0, 0}, 5) ==
          counts{3, 3});

    SUBCASE("crowding and convergence add up inside the weight") {
        CHECK(mpia::clone_counts(std::vector<double>{1.0, 0.0}, std::vector<int>{1, 2}, 8) ==
              counts{4, 4});
    }
    SUBCASE("totals stay within the documented band") {
        mpia::Rng rng(204);
        for (int trial = 0; trial < 50; ++trial) {
            std::size_t n = 1 + rng.uniform_index(20);
            std::vector<double> crowding(n);
            std::vector<int> p(n);
            for (auto& c : crowding) c = rng.uniform(0.0, 3.0);
            for (auto& v : p) v = static_cast<int>(rng.uniform_index(4));
            std::size_t n_clone = 1 + rng.uniform_index(100);
            auto result = mpia::clone_counts(crowding, p, n_clone);
            std::size_t total = std::accumulate(result.begin(), result.end(), std::size_t{0});
            CHECK(total >= n_clone);
            CHECK(total <= n_clone + n);
        }
    }
    SUBCASE("invalid inputs are rejected") {
        CHECK_THROWS(mpia::clone_counts(std::vector<double>{mpia::kInfiniteCrowding},
                                        std::vector<int>{0}, 5));
        CHECK_THROWS(mpia::clone_counts(std::vector<double>{-1.0}, std::vector<int>{0}, 5));
        CHECK_THROWS(mpia::clone_counts(std::vector<double>{1.0}, std::vector<int>{0}, 0));
    }
}

TEST_CASE("clone replicates sources in activation order") {
    mpia::Rng rng(205);
    auto population = sorted_random_population(rng, 30);
    auto clones = mpia::clone(population, 10, 25);

    REQUIRE(clones.clones.size() == clones.sources.size());
    CHECK(clones.clones.size() >= 25);
    CHECK(std::is_sorted(clones.sources.begin(), clones.sources.end()));
    for (std::size_t i = 0; i < clones.clones.size(); ++i) {
        CHECK(clones.sources[i] < 10);
        CHECK(clones.clones[i].objectives ==
              population.members[clones.sources[i]].objectives);
    }

    // Multiset of sources equals a direct clone_counts evaluation.
    std::vector<double> crowding;
    std::vector<int> layers;
    for (std::size_t i = 0; i < 10; ++i) {
        crowding.push_back(population.members[i].crowding);
        layers.push_back(population.members[i].mp_rank);
    }
    auto counts = mpia::clone_counts(mpia::replace_infinite_crowding(crowding),
                                     mpia::convergence_metric(layers), 25);
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t s : clones.sources) ++histogram[s];
    for (std::size_t i = 0; i < counts.size(); ++i) CHECK(histogram[i] == counts[i]);

    SUBCASE("unsorted population is rejected") {
        Population unsorted = population;
        for (auto& ind : unsorted.members) ind.mp_rank = 0;
        CHECK_THROWS(mpia::clone(unsorted, 10, 25));
    }
}

TEST_CASE("p1 schedule values") {
    CHECK(mpia::p1_schedule(0.15, 1.0) == doctest::Approx(0.475).epsilon(1e-12));
    CHECK(mpia::p1_schedule(15.0, 100.0) == doctest::Approx(0.475).epsilon(1e-12));
    CHECK(mpia::p1_schedule(0.0, 50.0) ==
          doctest::Approx(0.95 / (1.0 + std::exp(-3.0))).epsilon(1e-12));
    CHECK(mpia::p1_schedule(50.0, 50.0) ==
          doctest::Approx(0.95 / (1.0 + std::exp(17.0))).epsilon(1e-12));

    double previous = 1.0;
    for (int t = 0; t <= 100; ++t) {
        double value = mpia::p1_schedule(t, 100.0);
        CHECK(value < previous);
        previous = value;
    }
    CHECK_THROWS(mpia::p1_schedule(0.0, 0.0));
    CHECK_THROWS(mpia::p1_schedule(-1.0, 10.0));
}

TEST_CASE("sbx spread factor") {
    CHECK(mpia::sbx_delta(0.5, 20.0) == doctest::Approx(1.0));
    CHECK(mpia::sbx_delta(0.1, 20.0) == doctest::Approx(std::pow(0.2, 1.0 / 21.0)));
    CHECK(mpia::sbx_delta(0.9, 20.0) == doctest::Approx(std::pow(1.0 / 0.2, 1.0 / 21.0)));
    CHECK(mpia::sbx_delta(0.1, 20.0) < 1.0);
    CHECK(mpia::sbx_delta(0.9, 20.0) > 1.0);
}

TEST_CASE("differential kernels") {
    const std::vector<double> lower(4, 0.0);
    const std::vector<double> upper(4, 10.0);
    const std::vector<double> base{5.0, 5.0, 5.0, 5.0};
    const std::vector<std::vector<double>> pool = {
        {1.0, 2.0, 3.0, 4.0}, {0.5, 1.0, 1.5, 2.0}, {4.0, 3.0, 2.0, 1.0},
        {2.0, 2.0, 2.0, 2.0}, {9.0, 9.0, 9.0, 9.0},
    };

    SUBCASE("identical rows leave the base untouched") {
        std::vector<std::size_t> r{0, 0, 2, 2};
        mpia::Rng rng(1);
        CHECK(mpia::de_rand2bin(base, pool, r, 0.9, 0.7, 1, lower, upper, rng) == base);

        std::vector<std::size_t> r1{3, 3};
        mpia::Rng rng2(1);
        CHECK(mpia::de_rand1bin(base, pool, r1, 0.5, 0.5, 0, lower, upper, rng2) == base);
    }
    SUBCASE("full crossover matches the formula") {
        std::vector<std::size_t> r{0, 1, 2, 3};
        mpia::Rng rng(7);
        auto result = mpia::de_rand2bin(base, pool, r, 1.0, 0.7, 2, lower, upper, rng);
        for (std::size_t j = 0; j < 4; ++j) {
            double expected = base[j] + 0.7 * (pool[0][j] - pool[1][j]) +
                              0.7 * (pool[2][j] - pool[3][j]);
            expected = std::clamp(expected, lower[j], upper[j]);
            CHECK(result[j] == doctest::Approx(expected));
        }
    }
    SUBCASE("zero crossover changes exactly the forced coordinate") {
        std::vector<std::size_t> r{0, 1};
        mpia::Rng rng(9);
        auto result = mpia::de_rand1bin(base, pool, r, 0.0, 0.5, 3, lower, upper, rng);
        for (std::size_t j = 0; j < 3; ++j) CHECK(result[j] == base[j]);
        CHECK(result[3] == doctest::Approx(base[3] + 0.5 * (pool[0][3] - pool[1][3])));
    }
    SUBCASE("fixed-seed replay of rand/1/bin") {
        std::vector<std::size_t> r{4, 1};
        mpia::Rng rng(11);
        mpia::Rng replay(11);
        auto result = mpia::de_rand1bin(base, pool, r, 0.5, 0.5, 1, lower, upper, rng);
        for (std::size_t j = 0; j < 4; ++j) {
            bool cross = replay.uniform01() < 0.5 || j == 1;
            double expected =
                cross ? base[j] + 0.5 * (pool[4][j] - pool[1][j]) : base[j];
            expected = std::clamp(expected, lower[j], upper[j]);
            CHECK(result[j] == doctest::Approx(expected));
        }
    }
    SUBCASE("results are clamped to the bounds") {
        std::vector<double> tight_upper(4, 5.5);
        std::vector<std::size_t> r{4, 1, 4, 1};
        mpia::Rng rng(13);
        auto result = mpia::de_rand2bin(base, pool, r, 1.0, 0.7, 0, lower, tight_upper, rng);
        for (double v : result) {
            CHECK(v >= 0.0);
            CHECK(v <= 5.5);
        }
    }
}

TEST_CASE("guided crossover blends toward the guide") {
    const std::vector<double> lower(3, 0.0);
    const std::vector<double> upper(3, 10.0);
    const std::vector<double> base{2.0, 4.0, 6.0};
    const std::vector<double> guide{8.0, 4.0, 0.0};

    SUBCASE("zero rate copies the base") {
        mpia::Rng rng(21);
        CHECK(mpia::guided_sbx(base, guide, 0.0, 20.0, lower, upper, rng) == base);
    }
    SUBCASE("unit rate follows the blend formula") {
        mpia::Rng rng(22);
        mpia::Rng replay(22);
        auto result = mpia::guided_sbx(base, guide, 1.0, 20.0, lower, upper, rng);
        for (std::size_t j = 0; j < 3; ++j) {
            replay.uniform01();  // crossover coin
            double delta = mpia::sbx_delta(replay.uniform01(), 20.0);
            double expected = 0.5 * ((1.0 + delta) * base[j] + (1.0 - delta) * guide[j]);
            expected = std::clamp(expected, lower[j], upper[j]);
            CHECK(result[j] == doctest::Approx(expected));
        }
    }
}

TEST_CASE("polynomial mutation") {
    const std::vector<double> lower{0.0, 0.0};
    const std::vector<double> upper{1.0, 1.0};

    SUBCASE("zero rate is the identity") {
        std::vector<double> x{0.3, 0.7};
        mpia::Rng rng(31);
        mpia::polynomial_mutation(x, lower, upper, 0.0, 20.0, rng);
        CHECK(x == std::vector<double>{0.3, 0.7});
    }
    SUBCASE("stays within bounds from the boundary") {
        mpia::Rng rng(32);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<double> x{0.0, 1.0};
            mpia::polynomial_mutation(x, lower, upper, 1.0, 20.0, rng);
            for (double v : x) {
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
            }
        }
    }
    SUBCASE("displacement is symmetric on average") {
        mpia::Rng rng(33);
        double sum = 0.0;
        const int n = 100000;
        for (int i = 0; i < n; ++i) {
            std::vector<double> x{0.5};
            mpia::polynomial_mutation(x, std::vector<double>{0.0}, std::vector<double>{1.0}, 1.0,
                                      20.0, rng);
            sum += x[0] - 0.5;
        }
        CHECK(std::abs(sum / n) < 1e-3);
    }
    SUBCASE("zero-range variable is left alone") {
        std::vector<double> x{0.5};
        mpia::Rng rng(34);
        mpia::polynomial_mutation(x, std::vector<double>{0.5}, std::vector<double>{0.5}, 1.0, 20.0,
                                  rng);
        CHECK(x[0] == 0.5);
    }
}

TEST_CASE("guide lookup") {
    mpia::Rng rng(206);
    auto population = sorted_random_population(rng, 40);

    SUBCASE("first-front clones have no guide") {
        for (const auto& ind : population.members) {
            if (ind.mp_rank == 1) {
                mpia::Rng fresh(1);
                CHECK_FALSE(mpia::find_guide(ind, population, fresh).has_value());
            }
        }
    }
    SUBCASE("returned guides satisfy both conditions") {
        for (int trial = 0; trial < 50; ++trial) {
            for (const auto& ind : population.members) {
                if (ind.mp_rank <= 1) continue;
                mpia::Rng fresh(static_cast<std::uint64_t>(trial) * 977 + 5);
                auto guide = mpia::find_guide(ind, population, fresh);
                if (!guide) continue;
                const auto& g = population.members[*guide];
                CHECK(g.mp_rank < ind.mp_rank);
                bool some_party_le = false;
                for (std::size_t k = 0; k < g.party_ranks.size(); ++k) {
                    if (g.party_ranks[k] <= ind.party_ranks[k]) some_party_le = true;
                }
                CHECK(some_party_le);
            }
        }
    }
    SUBCASE("no candidate when everyone else ranks worse or equal") {
        Population tiny;
        for (int i = 0; i < 3; ++i) {
            mpia::Individual ind;
            ind.objectives = {0.0, 0.0, 0.0, 0.0};
            ind.party_ranks = {1, 1};
            ind.mp_rank = 1;
            tiny.members.push_back(ind);
        }
        tiny.members[0].mp_rank = 2;
        tiny.members[0].party_ranks = {2, 2};
        tiny.members[1].mp_rank = 2;
        tiny.members[1].party_ranks = {2, 2};
        tiny.members[2].mp_rank = 2;
        tiny.members[2].party_ranks = {2, 2};
        mpia::Rng fresh(3);
        CHECK_FALSE(mpia::find_guide(tiny.members[0], tiny, fresh).has_value());
    }
    SUBCASE("a successful lookup consumes exactly one draw") {
        const mpia::Individual* clone = nullptr;
        for (const auto& ind : population.members) {
            if (ind.mp_rank > 1) {
                clone = &ind;
                break;
            }
        }
        REQUIRE(clone != nullptr);
        mpia::Rng used(55);
        auto guide = mpia::find_guide(*clone, population, used);
        REQUIRE(guide.has_value());
        mpia::Rng reference(55);
        reference.uniform01();
        CHECK(used.raw() == reference.raw());
    }
}

TEST_CASE("adaptive operator branch accounting") {
    mpia::Rng rng(207);
    auto population = sorted_random_population(rng, 60);
    const std::vector<double> lower(4, 0.0);
    const std::vector<double> upper(4, 1.0);
    for (auto& ind : population.members) {
        ind.x = {0.2, 0.4, 0.6, 0.8};
    }
    OperatorConfig config;

    SUBCASE("offspring count equals clone count and bounds hold") {
        auto clones = mpia::clone(population, 20, 30);
        mpia::Rng op_rng(1);
        mpia::VariationCounters counters;
        auto offspring = mpia::adaptive_operator(population, 20, clones, 0, 100, lower, upper,
                                                 config, true, op_rng, &counters);
        CHECK(offspring.size() == clones.clones.size());
        CHECK(counters.op1 + counters.op2 + counters.op3 + counters.mutation_only ==
              offspring.size());
        CHECK(counters.op1 > 0);  // p1(0) is about 0.9
        for (const auto& child : offspring) {
            CHECK_FALSE(child.evaluated());
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(child.x[j] >= lower[j]);
                CHECK(child.x[j] <= upper[j]);
            }
        }
    }
    SUBCASE("activation below five disables rand/2/bin") {
        auto clones = mpia::clone(population, 4, 12);
        mpia::Rng op_rng(2);
        mpia::VariationCounters counters;
        mpia::adaptive_operator(population, 4, clones, 0, 100, lower, upper, config, true, op_rng,
                                &counters);
        CHECK(counters.op1 == 0);
        CHECK(counters.op3 > 0);
    }
    SUBCASE("activation below three leaves mutation only") {
        auto clones = mpia::clone(population, 2, 8);
        mpia::Rng op_rng(3);
        mpia::VariationCounters counters;
        mpia::adaptive_operator(population, 2, clones, 0, 100, lower, upper, config, true, op_rng,
                                &counters);
        CHECK(counters.op1 == 0);
        CHECK(counters.op2 == 0);
        CHECK(counters.op3 == 0);
        CHECK(counters.mutation_only == clones.clones.size());
    }
    SUBCASE("guided branch disabled replaces op2 by rand/1/bin") {
        auto clones = mpia::clone(population, 20, 40);
        mpia::Rng op_rng(4);
        mpia::VariationCounters counters;
        mpia::adaptive_operator(population, 20, clones, 99, 100, lower, upper, config, false,
                                op_rng, &counters);
        CHECK(counters.op2 == 0);
        CHECK(counters.op3 > 0);  // p1(99/100) is tiny, nearly everything lands here
    }
    SUBCASE("guided crossover fires at most once per source") {
        auto clones = mpia::clone(population, 20, 40);
        for (int seed = 0; seed < 10; ++seed) {
            mpia::Rng op_rng(static_cast<std::uint64_t>(seed));
            mpia::VariationCounters counters;
            mpia::adaptive_operator(population, 20, clones, 99, 100, lower, upper, config, true,
                                    op_rng, &counters);
            std::size_t eligible_sources = 0;
            for (std::size_t i = 0; i < 20; ++i) {
                if (population.members[i].mp_rank > 1) ++eligible_sources;
            }
            CHECK(counters.op2 <= eligible_sources);
        }
    }
}

TEST_CASE("selection keeps the crowded prefix") {
    mpia::Rng rng(208);

    SUBCASE("matches the literal removal trace") {
        for (int trial = 0; trial < 20; ++trial) {
            auto population = sorted_random_population(rng, 10 + rng.uniform_index(40));
            std::size_t n_keep = 1 + rng.uniform_index(population.size());
            auto kept = mpia::selection(population, n_keep);

            std::vector<int> mp_ranks;
            std::vector<double> crowding;
            for (const auto& ind : population.members) {
                mp_ranks.push_back(ind.mp_rank);
                crowding.push_back(ind.crowding);
            }
            auto expected = oracle::literal_selection(mp_ranks, crowding, n_keep);
            REQUIRE(kept.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(kept.members[i].objectives ==
                      population.members[expected[i]].objectives);
            }
        }
    }
    SUBCASE("small populations are returned whole") {
        auto population = sorted_random_population(rng, 8);
        CHECK(mpia::selection(population, 20).size() == 8);
    }
    SUBCASE("first layer survives whenever it fits") {
        for (int trial = 0; trial < 10; ++trial) {
            auto population = sorted_random_population(rng, 30);
            std::size_t first_layer = 0;
            for (const auto& ind : population.members) {
                if (ind.mp_rank == 1) ++first_layer;
            }
            if (first_layer > 15) continue;
            auto kept = mpia::selection(population, 15);
            std::size_t kept_first = 0;
            for (const auto& ind : kept.members) {
                if (ind.mp_rank == 1) ++kept_first;
            }
            CHECK(kept_first == first_layer);
        }
    }
    SUBCASE("unsorted input is rejected") {
        auto population = sorted_random_population(rng, 20);
        std::swap(population.members.front(), population.members.back());
        CHECK_THROWS(mpia::selection(population, 10));
    }
}

TEST_SUITE_END();
