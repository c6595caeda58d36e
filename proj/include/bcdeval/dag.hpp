#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "bcdeval/errors.hpp"

namespace bcdeval {

// Directed acyclic graph on d <= 16 labeled vertices, stored as bit rows:
// bit j of rows_[i] is the edge i -> j.
class Dag {
public:
    static constexpr int kMaxVertices = 16;

    explicit Dag(int d) : d_(d), rows_{} {
        if (d < 1 || d > kMaxVertices)
            throw DimensionTooLargeError("vertex count must be in [1, 16], got " +
                                         std::to_string(d));
    }

    int dim() const { return d_; }

    bool edge(int i, int j) const { return (rows_[i] >> j) & 1u; }

    int edge_count() const {
        int n = 0;
        for (int i = 0; i < d_; ++i) n += std::popcount(rows_[i]);
        return n;
    }

    std::uint16_t row(int i) const { return rows_[i]; }

    // bitmask of parents of j
    std::uint16_t parents(int j) const {
        std::uint16_t m = 0;
        for (int i = 0; i < d_; ++i) m |= static_cast<std::uint16_t>(edge(i, j) << i);
        return m;
    }

    std::vector<int> parent_list(int j) const {
        std::vector<int> out;
        for (int i = 0; i < d_; ++i)
            if (edge(i, j)) out.push_back(i);
        return out;
    }

    bool adjacent(int i, int j) const { return edge(i, j) || edge(j, i); }

    // true if j can reach i (so adding i -> j would close a cycle)
    bool reaches(int from, int to) const {
        if (from == to) return true;
        std::uint32_t frontier = 1u << from, seen = frontier;
        while (frontier) {
            std::uint32_t nxt = 0;
            for (int v = 0; v < d_; ++v)
                if (frontier & (1u << v)) nxt |= rows_[v];
            nxt &= ~seen;
            if (nxt & (1u << to)) return true;
            seen |= nxt;
            frontier = nxt;
        }
        return false;
    }

    // Kahn's algorithm; empty result means a cycle exists.
    std::vector<int> topological_order() const {
        std::array<int, kMaxVertices> indeg{};
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j)
                if (edge(i, j)) ++indeg[j];
        std::vector<int> order;
        order.reserve(d_);
        std::uint32_t ready = 0;
        for (int v = 0; v < d_; ++v)
            if (indeg[v] == 0) ready |= 1u << v;
        while (ready) {
            const int v = std::countr_zero(ready);
            ready &= ready - 1;
            order.push_back(v);
            for (int j = 0; j < d_; ++j)
                if (edge(v, j) && --indeg[j] == 0) ready |= 1u << j;
        }
        if (static_cast<int>(order.size()) != d_) return {};
        return order;
    }

    bool operator==(const Dag& o) const { return d_ == o.d_ && rows_ == o.rows_; }

    // number of directed-entry disagreements (used by the Hamming kernel)
    friend int hamming(const Dag& a, const Dag& b) {
        int n = 0;
        for (int i = 0; i < a.d_; ++i)
            n += std::popcount(static_cast<std::uint16_t>(a.rows_[i] ^ b.rows_[i]));
        return n;
    }

    // Trusted mutation for generators/enumeration; callers keep acyclicity.
    void set_edge_unchecked(int i, int j, bool on) {
        if (on)
            rows_[i] |= static_cast<std::uint16_t>(1u << j);
        else
            rows_[i] &= static_cast<std::uint16_t>(~(1u << j));
    }

private:
    int d_;
    std::array<std::uint16_t, kMaxVertices> rows_;
};

struct DagHash {
    std::size_t operator()(const Dag& g) const {
        std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(g.dim());
        for (int i = 0; i < g.dim(); ++i) {
            h ^= g.row(i);
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// Checks squareness, binary entries and acyclicity; also returns a
// topological order through `order_out` when requested.
template <typename Matrix>
inline Dag validate_dag(const Matrix& edges, std::vector<int>* order_out = nullptr) {
    const int d = static_cast<int>(edges.size());
    if (d < 1 || d > Dag::kMaxVertices)
        throw DimensionTooLargeError("vertex count must be in [1, 16]");
    Dag g(d);
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(edges[i].size()) != d)
            throw NonSquareError("edge matrix is not square");
        for (int j = 0; j < d; ++j) {
            const auto v = edges[i][j];
            if (v != 0 && v != 1) throw NonBinaryError("edge matrix entries must be 0 or 1");
            if (v == 1 && i == j) throw CyclicGraphError("self-loop at vertex " + std::to_string(i));
            if (v == 1) g.set_edge_unchecked(i, j, true);
        }
    }
    auto order = g.topological_order();
    if (order.empty()) throw CyclicGraphError("edge matrix contains a directed cycle");
    if (order_out) *order_out = std::move(order);
    return g;
}

inline Dag dag_from_edges(int d, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> m(d, std::vector<int>(d, 0));
    for (auto [i, j] : edges) m[i][j] = 1;
    return validate_dag(m);
}

// Every DAG on d labeled vertices, in lexicographic order over the row-major
// flattened edge matrix. Depth-first over cells with cycle pruning; a pruned
// branch can never recover acyclicity by adding more edges.
inline std::vector<Dag> enumerate_dags(int d) {
    if (d < 1 || d > 6)
        throw DimensionTooLargeError("enumeration supports 1 <= d <= 6, got " +
                                     std::to_string(d));
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) cells.emplace_back(i, j);

    std::vector<Dag> out;
    Dag g(d);
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == cells.size()) {
            out.push_back(g);
            return;
        }
        auto [i, j] = cells[k];
        self(self, k + 1);
        if (!g.reaches(j, i)) {
            g.set_edge_unchecked(i, j, true);
            self(self, k + 1);
            g.set_edge_unchecked(i, j, false);
        }
    };
    rec(rec, 0);
    return out;
}

// Structural Hamming distance: unordered vertex pairs whose edge status
// (absent / i->j / j->i) differs; a reversal costs 1.
inline int shd(const Dag& a, const Dag& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("shd: dimension mismatch");
    int s = 0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            const int sa = a.edge(i, j) ? 1 : (a.edge(j, i) ? 2 : 0);
            const int sb = b.edge(i, j) ? 1 : (b.edge(j, i) ? 2 : 0);
            if (sa != sb) ++s;
        }
    return s;
}

}  // namespace bcdeval
