#ifndef MONOWALK_SPARSITY_HPP
#define MONOWALK_SPARSITY_HPP

// Structural sparsity of a matrix: the co-support graph over columns, exact
// tree-depth by memoized recursion, and the small-entry/low-depth regime
// test used to classify instances.

#include "linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace monowalk {

struct MatrixGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // j < k over [0, n)
};

// Columns j and k are adjacent iff they are co-supported in some row.
inline MatrixGraph matrix_graph(const Mat& a) {
    MatrixGraph g;
    g.n = a.cols;
    for (int j = 0; j < a.cols; ++j)
        for (int k = j + 1; k < a.cols; ++k) {
            bool hit = false;
            for (int i = 0; i < a.rows && !hit; ++i)
                hit = a.at(i, j) != 0 && a.at(i, k) != 0;
            if (hit) g.edges.push_back({j, k});
        }
    return g;
}

namespace detail {

inline std::vector<std::uint64_t> adjacency_masks(const MatrixGraph& g) {
    std::vector<std::uint64_t> adj(g.n, 0);
    for (auto [j, k] : g.edges) {
        if (j < 0 || k < 0 || j >= g.n || k >= g.n || j == k)
            throw precondition_error("matrix graph: edge outside vertex range");
        adj[j] |= std::uint64_t(1) << k;
        adj[k] |= std::uint64_t(1) << j;
    }
    return adj;
}

// Connected component of the induced subgraph `sub` containing its lowest bit.
inline std::uint64_t component_of(const std::vector<std::uint64_t>& adj, std::uint64_t sub) {
    std::uint64_t comp = sub & -sub, frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & sub & ~comp;
        }
        comp |= next;
        frontier = next;
    }
    return comp;
}

inline int tree_depth_rec(const std::vector<std::uint64_t>& adj, std::uint64_t sub,
                          std::map<std::uint64_t, int>& memo) {
    if (sub == 0) return 0;
    auto it = memo.find(sub);
    if (it != memo.end()) return it->second;
    int td;
    std::uint64_t comp = component_of(adj, sub);
    if (comp != sub) {
        // disconnected: components nest in separate subtrees
        td = 0;
        std::uint64_t rest = sub;
        while (rest) {
            std::uint64_t c = component_of(adj, rest);
            td = std::max(td, tree_depth_rec(adj, c, memo));
            rest &= ~c;
        }
    } else if ((sub & (sub - 1)) == 0) {
        td = 1;  // single vertex
    } else {
        // connected: some vertex must be the root above all the rest
        td = 1 << 30;
        std::uint64_t rest = sub;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            td = std::min(td, 1 + tree_depth_rec(adj, sub & ~(std::uint64_t(1) << v), memo));
        }
    }
    memo.emplace(sub, td);
    return td;
}

}  // namespace detail

// Exact tree-depth: the least height over rooted forests whose ancestor
// chains cover every edge. Exponential-time recursion, hence the size cap.
inline int tree_depth(const MatrixGraph& g, int max_n = 20) {
    if (g.n > max_n || g.n > 63)
        throw budget_error("tree_depth: graph exceeds brute-force budget");
    if (g.n == 0) return 0;
    std::vector<std::uint64_t> adj = detail::adjacency_masks(g);
    std::map<std::uint64_t, int> memo;
    std::uint64_t all = g.n == 63 ? ~std::uint64_t(0) >> 1 : (std::uint64_t(1) << g.n) - 1;
    return detail::tree_depth_rec(adj, all, memo);
}

// Entries bounded by `a` in absolute value and one of the two matrix graphs
// (columns of A, or rows via the transpose) has tree-depth at most d.
inline bool in_sparse_regime(const Mat& m, const Int& a, int d, int max_n = 20) {
    for (const Rat& e : m.a)
        if (abs_int(num(e)) > a || !is_integer(e)) return false;
    int td_cols = tree_depth(matrix_graph(m), max_n);
    if (td_cols <= d) return true;
    int td_rows = tree_depth(matrix_graph(transpose(m)), max_n);
    return td_rows <= d;
}

}  // namespace monowalk

#endif
