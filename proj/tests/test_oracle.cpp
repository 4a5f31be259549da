#include <doctest.h>

#include <algorithm>
#include <vector>

#include "pforest/errors.hpp"
#include "pforest/forest.hpp"
#include "pforest/io.hpp"
#include "pforest/oracle.hpp"
#include "test_support.hpp"

using namespace pforest;

TEST_CASE("enumeration on the worked examples") {
    OracleReport k2 = enumerate_perfect_forests(Graph(2, {{1, 2}}));
    CHECK(k2.subsets_scanned == 2);
    REQUIRE(k2.forests.size() == 1);
    CHECK(k2.forests[0] == std::vector<Edge>{{1, 2}});

    // C_4's sorted edges are (1,2),(1,4),(2,3),(3,4); the matching
    // {(1,4),(2,3)} selects bits 1,2 (mask 6) and {(1,2),(3,4)} bits 0,3
    // (mask 9), so the mask order lists them in that order.
    Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    OracleReport rc4 = enumerate_perfect_forests(c4);
    CHECK(rc4.subsets_scanned == 16);
    REQUIRE(rc4.forests.size() == 2);
    CHECK(rc4.forests[0] == std::vector<Edge>{{1, 4}, {2, 3}});
    CHECK(rc4.forests[1] == std::vector<Edge>{{1, 2}, {3, 4}});

    Graph k4(4, testing::all_pairs(4));
    OracleReport rk4 = enumerate_perfect_forests(k4);
    CHECK(rk4.subsets_scanned == 64);
    CHECK(rk4.forests.size() == 3);  // exactly the three perfect matchings
    for (const auto& forest : rk4.forests) {
        CHECK(forest.size() == 2);
    }

    Graph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    CHECK(enumerate_perfect_forests(c5).forests.empty());
}

TEST_CASE("the cap refuses oversized graphs") {
    Graph k7(7, testing::all_pairs(7));  // 21 edges
    CHECK_THROWS_AS(enumerate_perfect_forests(k7, 20), TooLargeError);
    CHECK_NOTHROW(enumerate_perfect_forests(k7, 21));
    CHECK_THROWS_AS(enumerate_perfect_forests(k7, 63), InputError);
}

TEST_CASE("filtered enumeration equals the unfiltered reference") {
    // exhaustively tiny
    for (int n = 1; n <= 4; ++n) {
        auto pairs = testing::all_pairs(n);
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
            Graph g = testing::graph_from_mask(n, pairs, mask);
            CHECK(enumerate_perfect_forests(g).forests == testing::naive_perfect_forests(g));
        }
    }
    // seeded random mid-size
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = generate_random_graph(6, 0.3, seed);
        CHECK(enumerate_perfect_forests(g).forests == testing::naive_perfect_forests(g));
    }
}

TEST_CASE("forests exist exactly for all-even-component graphs, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto pairs = testing::all_pairs(n);
        for (uint64_t mask = 0; mask < (uint64_t{1} << pairs.size()); ++mask) {
            Graph g = testing::graph_from_mask(n, pairs, mask);
            bool all_even = true;
            for (const auto& comp : connected_components(g)) {
                all_even = all_even && comp.size() % 2 == 0;
            }
            bool any_forest = !enumerate_perfect_forests(g).forests.empty();
            CHECK(any_forest == all_even);
        }
    }
}

TEST_CASE("theorem check over small orders") {
    TheoremCheckSummary two = exhaustive_theorem_check(2);
    CHECK(two.graphs_checked == 1);
    CHECK(two.failures == 0);

    TheoremCheckSummary four = exhaustive_theorem_check(4);
    CHECK(four.graphs_checked == 38);
    CHECK(four.failures == 0);

    CHECK_THROWS_AS(exhaustive_theorem_check(3), InputError);
    CHECK_THROWS_AS(exhaustive_theorem_check(8), InputError);
    CHECK_THROWS_AS(exhaustive_theorem_check(0), InputError);
}

TEST_CASE("converse check: odd orders admit no perfect forest") {
    ConverseCheckSummary three = exhaustive_converse_check(3);
    CHECK(three.graphs_checked == 4);
    CHECK(three.forests_found == 0);

    CHECK_THROWS_AS(exhaustive_converse_check(4), InputError);
}

TEST_CASE("the finder's forest is always in the oracle's list") {
    for (uint64_t seed = 100; seed < 140; ++seed) {
        Graph g = generate_random_graph(6, 0.25, seed);
        if (g.edge_count() > 16) {
            continue;
        }
        PerfectForest found = find_perfect_forest(g);
        auto report = enumerate_perfect_forests(g, 16);
        CHECK(std::find(report.forests.begin(), report.forests.end(), found.edges) !=
              report.forests.end());
    }
}
