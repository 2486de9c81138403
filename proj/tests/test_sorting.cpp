#include <doctest.h>

#include <algorithm>
#include <map>

#include "helpers.hpp"
#include "mpia/sorting/nondominated.hpp"
#include "oracles.hpp"

using mpia::PartyScheme;
using mpia::Population;

namespace {

/// Five-member biparty population whose party layer rows come out as
/// (1,1),(1,1),(1,1),(1,2),(1,3).
Population table_population() {
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

const PartyScheme kBiparty({{0, 1}, {2, 3}}, 4);

}  // namespace

TEST_SUITE_BEGIN("sorting");

TEST_CASE("fast sort hand examples") {
    CHECK(mpia::fast_nondominated_sort({{0, 1}, {1, 0}, {2, 2}}) == std::vector<int>{1, 1, 2});
    CHECK(mpia::fast_nondominated_sort({{0, 2}, {1, 1}, {2, 0}}) == std::vector<int>{1, 1, 1});
    CHECK(mpia::fast_nondominated_sort({{5.0}}) == std::vector<int>{1});
    CHECK_THROWS(mpia::fast_nondominated_sort({}));
    CHECK_THROWS(mpia::fast_nondominated_sort({{1.0, 2.0}, {1.0}}));
}

TEST_CASE("fast sort equals the peel oracle") {
    mpia::Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng.uniform_index(30);
        std::size_t m = 1 + rng.uniform_index(3);
        auto population = testutil::random_population(rng, n, m, trial % 2 == 1);
        auto values = testutil::objectives_of(population);
        auto violations = testutil::violations_of(population);
        if (trial % 2 == 0) {
            CHECK(mpia::fast_nondominated_sort(values) == oracle::peel_sort(values));
        } else {
            CHECK(mpia::fast_nondominated_sort(values, violations) ==
                  oracle::peel_sort(values, violations));
        }
    }
}

TEST_CASE("mpnds2 reproduces the five-row table") {
    Population population = table_population();
    mpia::RankMatrix matrix = mpia::mpnds2(population, kBiparty);

    const std::vector<std::vector<int>> expected_rows = {
        {1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 3}};
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(matrix.at(i, 0) == expected_rows[i][0]);
        CHECK(matrix.at(i, 1) == expected_rows[i][1]);
        CHECK(population.members[i].party_ranks ==
              std::vector<int>{expected_rows[i][0], expected_rows[i][1]});
    }
    std::vector<int> mp_ranks;
    for (const auto& ind : population.members) mp_ranks.push_back(ind.mp_rank);
    CHECK(mp_ranks == std::vector<int>{1, 1, 1, 2, 3});
}

TEST_CASE("single party mpnds2 degenerates to the ordinary sort") {
    mpia::Rng rng(102);
    auto population = testutil::random_population(rng, 25, 3);
    auto expected = mpia::fast_nondominated_sort(testutil::objectives_of(population));
    mpia::mpnds2(population, PartyScheme::single(3));
    for (std::size_t i = 0; i < population.size(); ++i) {
        CHECK(population.members[i].mp_rank == expected[i]);
    }
}

TEST_CASE("mpnds2 equals the two-round oracle") {
    mpia::Rng rng(103);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t parties = 2 + rng.uniform_index(2);
        std::size_t m = 0;
        auto party_lists = testutil::random_parties(rng, parties, m);
        PartyScheme scheme(party_lists, m);
        auto population = testutil::random_population(rng, 5 + rng.uniform_index(26), m, true);

        auto expected = oracle::two_round_sort(testutil::objectives_of(population),
                                               testutil::violations_of(population), party_lists);
        mpia::mpnds2(population, scheme);
        for (std::size_t i = 0; i < population.size(); ++i) {
            CHECK(population.members[i].mp_rank == expected.mp_rank[i]);
            for (std::size_t k = 0; k < parties; ++k) {
                CHECK(population.members[i].party_ranks[k] == expected.rows[i][k]);
            }
        }
    }
}

TEST_CASE("mpnds2 rank is permutation invariant") {
    mpia::Rng rng(104);
    auto population = testutil::random_population(rng, 30, 4);
    auto shuffled = population;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
        std::swap(shuffled.members[i - 1], shuffled.members[rng.uniform_index(i)]);
    }
    mpia::mpnds2(population, kBiparty);
    mpia::mpnds2(shuffled, kBiparty);

    std::map<std::vector<double>, int> rank_of;
    for (const auto& ind : population.members) rank_of[ind.objectives] = ind.mp_rank;
    for (const auto& ind : shuffled.members) CHECK(rank_of.at(ind.objectives) == ind.mp_rank);
}

TEST_CASE("strict improvement never worsens the multiparty rank") {
    mpia::Rng rng(105);
    for (int trial = 0; trial < 10; ++trial) {
        auto population = testutil::random_population(rng, 20, 4);
        mpia::mpnds2(population, kBiparty);
        std::size_t pick = rng.uniform_index(population.size());
        int before = population.members[pick].mp_rank;

        auto improved = population;
        for (auto& v : improved.members[pick].objectives) v -= rng.uniform(0.01, 0.2);
        mpia::mpnds2(improved, kBiparty);
        CHECK(improved.members[pick].mp_rank <= before);
    }
}

TEST_CASE("mpnds2 requires evaluated members") {
    Population population;
    population.members.emplace_back();
    CHECK_THROWS(mpia::mpnds2(population, kBiparty));
}

TEST_CASE("crowding distance hand cases") {
    SUBCASE("two-point layer is all boundaries") {
        auto d = mpia::crowding_distance({{0.0, 1.0}, {1.0, 0.0}}, {1, 1});
        CHECK(d[0] == mpia::kInfiniteCrowding);
        CHECK(d[1] == mpia::kInfiniteCrowding);
    }
    SUBCASE("interior point accumulates normalized gaps") {
        auto d = mpia::crowding_distance({{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}}, {1, 1, 1});
        CHECK(d[0] == mpia::kInfiniteCrowding);
        CHECK(d[1] == doctest::Approx(2.0));
        CHECK(d[2] == mpia::kInfiniteCrowding);
    }
    SUBCASE("zero-range objective contributes nothing") {
        auto d = mpia::crowding_distance({{0.0, 5.0}, {1.0, 5.0}, {2.0, 5.0}}, {1, 1, 1});
        CHECK(d[1] == doctest::Approx(1.0));
    }
    SUBCASE("layers are scored independently") {
        auto d = mpia::crowding_distance({{0.0, 2.0}, {1.0, 1.0}, {2.0, 0.0}, {5.0, 5.0}},
                                         {1, 1, 1, 2});
        CHECK(d[1] == doctest::Approx(2.0));
        CHECK(d[3] == mpia::kInfiniteCrowding);
    }
}

TEST_CASE("sort_population realizes the documented total order") {
    mpia::Rng rng(106);
    auto population = testutil::random_population(rng, 40, 4, true);
    mpia::mpnds2(population, kBiparty);
    mpia::sort_population(population);

    for (std::size_t i = 1; i < population.size(); ++i) {
        const auto& prev = population.members[i - 1];
        const auto& curr = population.members[i];
        CHECK(prev.mp_rank <= curr.mp_rank);
        if (prev.mp_rank == curr.mp_rank) CHECK(prev.crowding >= curr.crowding);
    }

    // Crowding values agree with a recomputation over the full objectives.
    std::vector<int> layers;
    for (const auto& ind : population.members) layers.push_back(ind.mp_rank);
    auto expected = mpia::crowding_distance(testutil::objectives_of(population), layers);
    for (std::size_t i = 0; i < population.size(); ++i) {
        if (expected[i] == mpia::kInfiniteCrowding) {
            CHECK(population.members[i].crowding == mpia::kInfiniteCrowding);
        } else {
            CHECK(population.members[i].crowding == doctest::Approx(expected[i]));
        }
    }
}

TEST_CASE("multiparty pareto filter") {
    SUBCASE("table population keeps the first three members") {
        Population population = table_population();
        CHECK(mpia::multiparty_pareto_filter(population, kBiparty) ==
              std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("single party reduces to the first front") {
        mpia::Rng rng(107);
        auto population = testutil::random_population(rng, 20, 2);
        auto layers = mpia::fast_nondominated_sort(testutil::objectives_of(population));
        std::vector<std::size_t> expected;
        for (std::size_t i = 0; i < layers.size(); ++i) {
            if (layers[i] == 1) expected.push_back(i);
        }
        CHECK(mpia::multiparty_pareto_filter(population, PartyScheme::single(2)) == expected);
    }
    SUBCASE("random instances match the oracle intersection") {
        mpia::Rng rng(108);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t m = 0;
            auto party_lists = testutil::random_parties(rng, 2, m);
            PartyScheme scheme(party_lists, m);
            auto population = testutil::random_population(rng, 15, m, true);
            CHECK(mpia::multiparty_pareto_filter(population, scheme) ==
                  oracle::mps_filter(testutil::objectives_of(population),
                                     testutil::violations_of(population), party_lists));
        }
    }
}

TEST_SUITE_END();
