#include <monowalk/hardness.hpp>
#include <monowalk/sparsity.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace monowalk;

namespace {

MatrixGraph graph(int n, std::vector<std::pair<int, int>> edges) {
    return MatrixGraph{n, std::move(edges)};
}

MatrixGraph path(int n) {
    MatrixGraph g{n, {}};
    for (int j = 0; j + 1 < n; ++j) g.edges.push_back({j, j + 1});
    return g;
}

MatrixGraph complete(int n) {
    MatrixGraph g{n, {}};
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) g.edges.push_back({j, k});
    return g;
}

MatrixGraph random_graph(std::uint64_t seed, int n) {
    detail::Rng rng(seed);
    MatrixGraph g{n, {}};
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            if (rng.range(0, 1) == 1) g.edges.push_back({j, k});
    return g;
}

// g with vertex v deleted and the remaining vertices reindexed
MatrixGraph delete_vertex(const MatrixGraph& g, int v) {
    MatrixGraph out{g.n - 1, {}};
    for (auto [j, k] : g.edges) {
        if (j == v || k == v) continue;
        out.edges.push_back({j - (j > v ? 1 : 0), k - (k > v ? 1 : 0)});
    }
    return out;
}

}  // namespace

TEST_CASE("matrix_graph joins co-supported columns") {
    MatrixGraph diag = matrix_graph(mat_of_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
    CHECK(diag.n == 3);
    CHECK(diag.edges.empty());

    MatrixGraph chain = matrix_graph(mat_of_ints({{1, 1, 0}, {0, 1, 1}}));
    CHECK(chain.n == 3);
    CHECK(chain.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    MatrixGraph dense = matrix_graph(mat_of_ints({{1, 1, 1}}));
    CHECK(dense.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("tree_depth on pinned families") {
    CHECK(tree_depth(graph(0, {})) == 0);
    CHECK(tree_depth(graph(1, {})) == 1);
    CHECK(tree_depth(graph(5, {})) == 1);  // edgeless: all roots
    CHECK(tree_depth(path(2)) == 2);
    CHECK(tree_depth(path(3)) == 2);  // root the middle vertex
    CHECK(tree_depth(path(7)) == 3);  // halving: ceil(log2(n + 1))
    CHECK(tree_depth(path(8)) == 4);
    CHECK(tree_depth(complete(4)) == 4);
    CHECK(tree_depth(graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}})) == 2);  // star
    CHECK(tree_depth(graph(4, {{0, 1}, {2, 3}})) == 2);  // two components side by side
    CHECK(tree_depth(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})) == 3);  // 4-cycle
}

TEST_CASE("tree_depth guards its budget and edge ranges") {
    CHECK_THROWS_AS(tree_depth(graph(21, {})), budget_error);
    CHECK_NOTHROW(tree_depth(graph(21, {}), 21));
    CHECK_THROWS_AS(tree_depth(graph(70, {}), 70), budget_error);  // mask width cap
    CHECK_THROWS_AS(tree_depth(graph(2, {{0, 2}})), precondition_error);
}

TEST_CASE("tree_depth matches the elimination-order oracle") {
    CHECK(oracles::treedepth_elim(path(7)) == 3);
    CHECK(oracles::treedepth_elim(complete(4)) == 4);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 1 + (int)(seed % 6);
        MatrixGraph g = random_graph(seed, n);
        CAPTURE(seed, n, g.edges);
        CHECK(tree_depth(g) == oracles::treedepth_elim(g));
    }
}

TEST_CASE("deleting a vertex lowers tree-depth by at most one") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        int n = 2 + (int)(seed % 5);
        MatrixGraph g = random_graph(seed, n);
        int td = tree_depth(g);
        for (int v = 0; v < n; ++v) {
            CAPTURE(seed, n, v, g.edges);
            CHECK(tree_depth(delete_vertex(g, v)) >= td - 1);
        }
    }
}

TEST_CASE("in_sparse_regime checks entries and both matrix graphs") {
    Mat diag = mat_of_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
    CHECK(in_sparse_regime(diag, Int(3), 1));
    CHECK_FALSE(in_sparse_regime(diag, Int(1), 1));  // entry 2 over the cap

    Mat dense = mat_of_ints({{1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1},
                             {1, 1, 1, 1, 1}});
    CHECK_FALSE(in_sparse_regime(dense, Int(1), 3));  // both graphs are K5
    CHECK(in_sparse_regime(dense, Int(1), 5));

    // one row: the column graph is K5 but the transpose is a single vertex
    Mat row = mat_of_ints({{1, 1, 1, 1, 1}});
    CHECK(in_sparse_regime(row, Int(1), 2));

    CHECK_FALSE(in_sparse_regime(mat_of_ints({{4}}), Int(3), 1));
    Mat frac(1, 1);
    frac.at(0, 0) = Rat(1, 2);
    CHECK_FALSE(in_sparse_regime(frac, Int(3), 1));
}
