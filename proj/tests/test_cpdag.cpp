#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "bcdeval/cpdag.hpp"
#include "oracles.hpp"

using namespace bcdeval;

namespace {

std::vector<int> pattern_of(const Cpdag& c) {
    std::vector<int> out;
    for (int i = 0; i < c.dim(); ++i)
        for (int j = i + 1; j < c.dim(); ++j) {
            if (c.undirected(i, j)) out.push_back(1);
            else if (c.directed(i, j)) out.push_back(2);
            else if (c.directed(j, i)) out.push_back(3);
            else out.push_back(0);
        }
    return out;
}

}  // namespace

TEST_CASE("cpdag_of on the canonical small cases") {
    Dag chain = dag_from_edges(3, {{0, 1}, {1, 2}});
    Cpdag c = cpdag_of(chain);
    CHECK(c.undirected(0, 1));
    CHECK(c.undirected(1, 2));
    CHECK_FALSE(c.directed(0, 1));
    CHECK_FALSE(c.adjacent(0, 2));

    Dag collider = dag_from_edges(3, {{0, 2}, {1, 2}});
    Cpdag v = cpdag_of(collider);
    CHECK(v.directed(0, 2));
    CHECK(v.directed(1, 2));
    CHECK_FALSE(v.undirected(0, 2));

    Cpdag e = cpdag_of(Dag(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK_FALSE(e.adjacent(i, j));
}

TEST_CASE("cpdag_of agrees with the brute-force MEC oracle exhaustively (d <= 4)") {
    for (int d = 2; d <= 4; ++d) {
        auto dags = enumerate_dags(d);
        auto classes = oracle::mec_partition(dags);
        for (const auto& [key, members] : classes) {
            const auto expected = oracle::oracle_cpdag_pattern(members);
            for (const auto& g : members) CHECK(pattern_of(cpdag_of(g)) == expected);
        }
        // distinct across MECs: map pattern -> class key must be injective
        std::map<std::vector<int>, oracle::MecKey> seen;
        for (const auto& [key, members] : classes) {
            const auto pat = pattern_of(cpdag_of(members.front()));
            auto [it, inserted] = seen.emplace(pat, key);
            CHECK(inserted);
        }
    }
}

TEST_CASE("same_mec matches cpdag equality exhaustively (d <= 4)") {
    for (int d = 2; d <= 4; ++d) {
        auto dags = enumerate_dags(d);
        std::vector<Cpdag> cpdags;
        cpdags.reserve(dags.size());
        for (const auto& g : dags) cpdags.push_back(cpdag_of(g));
        for (std::size_t a = 0; a < dags.size(); ++a)
            for (std::size_t b = a; b < dags.size(); ++b)
                CHECK(same_mec(dags[a], dags[b]) == (cpdags[a] == cpdags[b]));
    }
}

TEST_CASE("same_mec basics") {
    Dag fwd = dag_from_edges(2, {{0, 1}});
    Dag bwd = dag_from_edges(2, {{1, 0}});
    CHECK(same_mec(fwd, bwd));
    CHECK(same_mec(fwd, fwd));

    Dag collider = dag_from_edges(3, {{0, 2}, {1, 2}});
    Dag chain_same_skel = dag_from_edges(3, {{0, 2}, {2, 1}});
    CHECK_FALSE(same_mec(collider, chain_same_skel));
}

TEST_CASE("cpdag_shd basics and Fig. 11 style zero distances") {
    Dag fwd = dag_from_edges(2, {{0, 1}});
    Dag bwd = dag_from_edges(2, {{1, 0}});
    CHECK(cpdag_shd(cpdag_of(fwd), cpdag_of(fwd)) == 0);
    CHECK(cpdag_shd(cpdag_of(fwd), cpdag_of(bwd)) == 0);

    Dag chain = dag_from_edges(3, {{0, 1}, {1, 2}});
    Dag collider = dag_from_edges(3, {{0, 2}, {1, 2}});
    CHECK(cpdag_shd(cpdag_of(chain), cpdag_of(collider)) > 0);
    CHECK_THROWS_AS(cpdag_shd(cpdag_of(chain), cpdag_of(fwd)), DimensionMismatchError);
}

TEST_CASE("cpdag_of sampled agreement with the oracle at d = 5") {
    auto dags = enumerate_dags(5);
    auto classes = oracle::mec_partition(dags);
    int checked = 0;
    for (const auto& [key, members] : classes) {
        if (++checked % 97 != 0) continue;  // sparse but deterministic subsample
        const auto expected = oracle::oracle_cpdag_pattern(members);
        for (const auto& g : members) CHECK(pattern_of(cpdag_of(g)) == expected);
    }
}
