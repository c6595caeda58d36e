#pragma once

#include <array>
#include <cstdint>
#include <tuple>
#include <vector>

#include "bcdeval/dag.hpp"

namespace bcdeval {

// Completed PDAG of a Markov equivalence class: compelled edges in dir_,
// reversible edges in und_ (symmetric). The two parts are edge-disjoint.
class Cpdag {
public:
    explicit Cpdag(int d) : d_(d), dir_{}, und_{} {}

    int dim() const { return d_; }
    bool directed(int i, int j) const { return (dir_[i] >> j) & 1u; }
    bool undirected(int i, int j) const { return (und_[i] >> j) & 1u; }

    void set_directed(int i, int j) {
        dir_[i] |= static_cast<std::uint16_t>(1u << j);
        und_[i] &= static_cast<std::uint16_t>(~(1u << j));
        und_[j] &= static_cast<std::uint16_t>(~(1u << i));
    }
    void set_undirected(int i, int j) {
        und_[i] |= static_cast<std::uint16_t>(1u << j);
        und_[j] |= static_cast<std::uint16_t>(1u << i);
    }

    bool adjacent(int i, int j) const {
        return directed(i, j) || directed(j, i) || undirected(i, j);
    }

    bool operator==(const Cpdag& o) const {
        return d_ == o.d_ && dir_ == o.dir_ && und_ == o.und_;
    }

private:
    int d_;
    std::array<std::uint16_t, Dag::kMaxVertices> dir_;
    std::array<std::uint16_t, Dag::kMaxVertices> und_;
};

// v-structures a -> c <- b with a, b nonadjacent, as (min(a,b), max(a,b), c)
inline std::vector<std::tuple<int, int, int>> v_structures(const Dag& g) {
    std::vector<std::tuple<int, int, int>> vs;
    const int d = g.dim();
    for (int c = 0; c < d; ++c)
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                if (a != c && b != c && g.edge(a, c) && g.edge(b, c) && !g.adjacent(a, b))
                    vs.emplace_back(a, b, c);
    return vs;
}

// Verma-Pearl criterion: same skeleton and same v-structures.
inline bool same_mec(const Dag& a, const Dag& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("same_mec: dimension mismatch");
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.adjacent(i, j) != b.adjacent(i, j)) return false;
    return v_structures(a) == v_structures(b);
}

// Skeleton + v-structures, then Meek closure.
//   R1: a -> b, b - c, a and c nonadjacent        => b -> c
//   R2: a -> b -> c, a - c                        => a -> c
//   R3: a - b, a - c, a - d, c -> b, d -> b,
//       c and d nonadjacent                       => a -> b
//   R4: a - b, a - d, d -> c, c -> b,
//       b and d nonadjacent, a and c adjacent     => a -> b
inline Cpdag cpdag_of(const Dag& g) {
    const int d = g.dim();
    Cpdag c(d);
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (g.adjacent(i, j)) c.set_undirected(i, j);
    for (auto [a, b, v] : v_structures(g)) {
        c.set_directed(a, v);
        c.set_directed(b, v);
    }

    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                if (!c.undirected(a, b)) continue;
                bool orient = false;
                for (int x = 0; x < d && !orient; ++x) {
                    if (x == a || x == b) continue;
                    // R1 (x -> a, a - b, x and b nonadjacent)
                    if (c.directed(x, a) && !c.adjacent(x, b)) orient = true;
                    // R2 (a -> x -> b, a - b)
                    if (c.directed(a, x) && c.directed(x, b)) orient = true;
                }
                for (int x = 0; x < d && !orient; ++x) {
                    if (x == a || x == b) continue;
                    for (int y = x + 1; y < d && !orient; ++y) {
                        if (y == a || y == b) continue;
                        // R3
                        if (c.undirected(a, x) && c.undirected(a, y) && c.directed(x, b) &&
                            c.directed(y, b) && !c.adjacent(x, y))
                            orient = true;
                        // R4, both roles of (x, y) as (d, c)
                        if (c.undirected(a, x) && c.directed(x, y) && c.directed(y, b) &&
                            !c.adjacent(b, x) && c.adjacent(a, y))
                            orient = true;
                        if (c.undirected(a, y) && c.directed(y, x) && c.directed(x, b) &&
                            !c.adjacent(b, y) && c.adjacent(a, x))
                            orient = true;
                    }
                }
                if (orient) {
                    c.set_directed(a, b);
                    changed = true;
                }
            }
        }
    }
    return c;
}

// Unordered pairs whose status among {absent, undirected, i->j, j->i}
// differs; any mismatch costs 1.
inline int cpdag_shd(const Cpdag& a, const Cpdag& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("cpdag_shd: dimension mismatch");
    int s = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            auto status = [&](const Cpdag& c) {
                if (c.undirected(i, j)) return 1;
                if (c.directed(i, j)) return 2;
                if (c.directed(j, i)) return 3;
                return 0;
            };
            if (status(a) != status(b)) ++s;
        }
    return s;
}

}  // namespace bcdeval
