#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "bcdeval/dag.hpp"
#include "bcdeval/rng.hpp"

namespace bcdeval {

enum class GraphFamily { ER, SF };

struct GraphFamilySpec {
    GraphFamily family = GraphFamily::ER;
    int d = 5;
    int edges_per_node = 1;
    std::uint64_t seed = 0;

    void validate() const {
        if (d < 1) throw ConfigError("graph spec: d must be >= 1");
        if (edges_per_node < 1) throw ConfigError("graph spec: edges_per_node must be >= 1");
    }
};

// ER: each unordered pair gets an edge with probability
// 2*edges_per_node/(d-1), capped at 1, oriented along a uniformly random
// vertex permutation so the expected edge count is d*edges_per_node without
// index-biased orientations. SF: preferential attachment, edges_per_node
// attachments per new vertex, oriented existing -> new, same relabeling.
inline Dag random_graph(const GraphFamilySpec& spec) {
    spec.validate();
    Rng rng(derive_seed(spec.seed, 0x6772617068ULL));
    const int d = spec.d;

    std::vector<int> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = d - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1))]);

    Dag g(d);
    if (spec.family == GraphFamily::ER) {
        if (d == 1) return g;
        const double p = std::min(1.0, 2.0 * spec.edges_per_node / (d - 1.0));
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (rng.uniform() < p) g.set_edge_unchecked(perm[a], perm[b], true);
        return g;
    }

    // scale-free: vertex k (in permuted order) attaches to min(k, m) earlier
    // vertices chosen by degree-proportional sampling without replacement
    const int m = spec.edges_per_node;
    std::vector<int> degree(d, 0);
    for (int k = 1; k < d; ++k) {
        const int attach = std::min(k, m);
        std::vector<int> candidates(k);
        std::iota(candidates.begin(), candidates.end(), 0);
        for (int t = 0; t < attach; ++t) {
            double total = 0.0;
            for (int c : candidates) total += degree[c] + 1.0;
            double u = rng.uniform() * total;
            std::size_t pick = 0;
            for (std::size_t ci = 0; ci < candidates.size(); ++ci) {
                u -= degree[candidates[ci]] + 1.0;
                if (u < 0.0) {
                    pick = ci;
                    break;
                }
            }
            const int src = candidates[pick];
            candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
            g.set_edge_unchecked(perm[src], perm[k], true);
            ++degree[src];
            ++degree[k];
        }
    }
    return g;
}

}  // namespace bcdeval
