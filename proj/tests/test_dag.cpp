#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "bcdeval/dag.hpp"
#include "bcdeval/rng.hpp"
#include "oracles.hpp"

using namespace bcdeval;

TEST_CASE("validate_dag accepts and orders valid graphs") {
    std::vector<std::vector<int>> zero(3, std::vector<int>(3, 0));
    std::vector<int> order;
    Dag g = validate_dag(zero, &order);
    CHECK(g.edge_count() == 0);
    CHECK(order.size() == 3);

    std::vector<std::vector<int>> chain = {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}};
    Dag c = validate_dag(chain, &order);
    CHECK(c.edge(0, 1));
    CHECK(c.edge(1, 2));
    CHECK(order == std::vector<int>{0, 1, 2});
}

TEST_CASE("validate_dag rejects malformed input") {
    std::vector<std::vector<int>> two_cycle = {{0, 1}, {1, 0}};
    CHECK_THROWS_AS(validate_dag(two_cycle), CyclicGraphError);

    std::vector<std::vector<int>> self_loop = {{1, 0}, {0, 0}};
    CHECK_THROWS_AS(validate_dag(self_loop), CyclicGraphError);

    std::vector<std::vector<int>> nonsquare = {{0, 1}, {0}};
    CHECK_THROWS_AS(validate_dag(nonsquare), NonSquareError);

    std::vector<std::vector<int>> nonbinary = {{0, 2}, {0, 0}};
    CHECK_THROWS_AS(validate_dag(nonbinary), NonBinaryError);

    std::vector<std::vector<int>> big_cycle = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK_THROWS_AS(validate_dag(big_cycle), CyclicGraphError);
}

TEST_CASE("enumerate_dags matches hand counts at d=2") {
    auto dags = enumerate_dags(2);
    REQUIRE(dags.size() == 3);
    // lexicographic over (0,1), (1,0): {}, {2->1}, {1->2}
    CHECK(dags[0].edge_count() == 0);
    CHECK(dags[1].edge(1, 0));
    CHECK(dags[2].edge(0, 1));
}

TEST_CASE("enumerate_dags equals brute force for d <= 4") {
    for (int d = 1; d <= 4; ++d) {
        auto fast = enumerate_dags(d);
        auto brute = oracle::brute_force_dags(d);
        REQUIRE(fast.size() == brute.size());
        std::set<std::vector<std::uint16_t>> seen;
        for (const auto& g : fast) {
            std::vector<std::uint16_t> rows;
            for (int i = 0; i < d; ++i) rows.push_back(g.row(i));
            CHECK(seen.insert(rows).second);  // no duplicates
        }
        for (const auto& g : brute) {
            std::vector<std::uint16_t> rows;
            for (int i = 0; i < d; ++i) rows.push_back(g.row(i));
            CHECK(seen.count(rows) == 1);
        }
    }
}

TEST_CASE("enumerate_dags counts match Robinson's recurrence") {
    CHECK(oracle::robinson_count(1) == 1);
    CHECK(oracle::robinson_count(2) == 3);
    CHECK(oracle::robinson_count(3) == 25);
    CHECK(oracle::robinson_count(4) == 543);
    CHECK(oracle::robinson_count(5) == 29281);
    for (int d = 1; d <= 5; ++d)
        CHECK(enumerate_dags(d).size() == static_cast<std::size_t>(oracle::robinson_count(d)));
    CHECK_THROWS_AS(enumerate_dags(7), DimensionTooLargeError);
}

TEST_CASE("shd trivial examples") {
    Dag fwd = dag_from_edges(2, {{0, 1}});
    Dag bwd = dag_from_edges(2, {{1, 0}});
    CHECK(shd(fwd, fwd) == 0);
    CHECK(shd(fwd, bwd) == 1);

    Dag chain = dag_from_edges(3, {{0, 1}, {1, 2}});
    Dag empty(3);
    CHECK(shd(chain, empty) == 2);
    CHECK_THROWS_AS(shd(fwd, chain), DimensionMismatchError);
}

TEST_CASE("shd is a metric on random triples") {
    Rng rng(7);
    auto dags = enumerate_dags(4);
    for (int trial = 0; trial < 300; ++trial) {
        const Dag& a = dags[rng.below(dags.size())];
        const Dag& b = dags[rng.below(dags.size())];
        const Dag& c = dags[rng.below(dags.size())];
        CHECK(shd(a, b) == shd(b, a));
        CHECK((shd(a, b) == 0) == (a == b));
        CHECK(shd(a, c) <= shd(a, b) + shd(b, c));
    }
}

TEST_CASE("topological order respects edges") {
    Rng rng(11);
    auto dags = enumerate_dags(4);
    for (int trial = 0; trial < 100; ++trial) {
        const Dag& g = dags[rng.below(dags.size())];
        auto order = g.topological_order();
        REQUIRE(order.size() == 4);
        std::vector<int> pos(4);
        for (int i = 0; i < 4; ++i) pos[order[i]] = i;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (g.edge(i, j)) CHECK(pos[i] < pos[j]);
    }
}
