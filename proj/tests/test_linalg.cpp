#include <monowalk/hardness.hpp>
#include <monowalk/linalg.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace monowalk;

namespace {

// 3x7 integer matrix used across the suite; its subdeterminant maximum is 4.
Mat demo_matrix() {
    return mat_of_ints({{2, 1, 0, 1, 2, 2, 1},
                        {0, 1, 1, 1, 0, 1, 0},
                        {2, 2, 1, 0, 0, 1, 1}});
}

Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

// Rank as the largest k with a nonzero k x k subdeterminant; independent of
// the echelon-form code path.
int rank_by_minors(const Mat& m) {
    int best = 0;
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        bool found = false;
        detail::for_each_subset(m.rows, k, [&](const std::vector<int>& ri) {
            detail::for_each_subset(m.cols, k, [&](const std::vector<int>& ci) {
                if (!found && detail::subdeterminant(m, ri, ci) != 0) found = true;
            });
        });
        if (found) best = k;
    }
    return best;
}

Mat random_small_matrix(std::uint64_t seed, int m, int n, long long amax) {
    detail::Rng rng(seed);
    Mat a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = Rat(Int(rng.range(-amax, amax)));
    return a;
}

}  // namespace

TEST_CASE("matrix construction and accessors") {
    Mat m = mat_of_ints({{1, 2}, {3, 4}});
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK(m.at(1, 0) == Rat(3));
    CHECK(is_integral(m));
    CHECK_FALSE(is_zero(m));
    CHECK(is_zero(Mat(2, 3)));
    CHECK_THROWS_AS(mat_of_ints({{1, 2}, {3}}), precondition_error);
    CHECK_THROWS_AS(mat_of_ints({}), precondition_error);

    Mat t = transpose(m);
    CHECK(t.at(0, 1) == Rat(3));
    CHECK(transpose(t) == m);

    CHECK(mat_vec(m, vec_of_ints({1, -1})) == vec_of_ints({-1, -1}));
    CHECK_THROWS_AS(mat_vec(m, vec_of_ints({1})), precondition_error);

    Mat s = columns(m, {1});
    CHECK(s.cols == 1);
    CHECK(s.at(0, 0) == Rat(2));
    CHECK_THROWS_AS(columns(m, {2}), precondition_error);
}

TEST_CASE("rref recovers the inverse via an augmented identity") {
    Mat m = mat_of_ints({{2, 1, 0}, {0, 3, 1}, {1, 0, 2}});
    Mat aug(3, 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, i + 3) = 1;
    }
    Rref rr = rref(aug, 3);
    REQUIRE(rr.rank == 3);
    REQUIRE(rr.pivots == std::vector<int>{0, 1, 2});
    Mat inv(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) inv.at(i, j) = rr.r.at(i, j + 3);
    // multiply back: m * inv must be the identity, entry by entry
    Mat prod(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) prod.at(i, j) += m.at(i, k) * inv.at(k, j);
    CHECK(prod == identity(3));
}

TEST_CASE("rref handles rank-deficient and swap-needing input") {
    // second row is twice the first
    Mat m = mat_of_ints({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    Rref rr = rref(m);
    CHECK(rr.rank == 2);
    CHECK(rr.pivots == std::vector<int>{0, 1});

    // leading zero forces a row swap
    Mat s = mat_of_ints({{0, 1}, {1, 0}});
    Rref rs = rref(s);
    CHECK(rs.rank == 2);
    CHECK(rs.r == identity(2));

    CHECK(rank_of(Mat(2, 2)) == 0);
    CHECK(rank_of(demo_matrix()) == 3);
}

TEST_CASE("rank agrees with the minor-based oracle on random matrices") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        Mat a = random_small_matrix(seed, 1 + (int)(seed % 4), 1 + (int)(seed * 3 % 5), 2);
        CAPTURE(seed);
        CHECK(rank_of(a) == rank_by_minors(a));
    }
}

TEST_CASE("rank_of_columns selects before ranking") {
    Mat a = demo_matrix();
    CHECK(rank_of_columns(a, {}) == 0);
    CHECK(rank_of_columns(a, {0}) == 1);
    CHECK(rank_of_columns(a, {0, 1}) == 2);
    CHECK(rank_of_columns(a, {0, 1, 2}) == 2);  // dependent triple
    CHECK(rank_of_columns(a, {0, 1, 3}) == 3);
}

TEST_CASE("kernel_vector_on_support returns the primitive normalized kernel vector") {
    Mat a = demo_matrix();

    Vec c = kernel_vector_on_support(a, {0, 1, 2});
    CHECK(c == vec_of_ints({1, -2, 2, 0, 0, 0, 0}));
    CHECK(is_zero(mat_vec(a, c)));

    Vec c2 = kernel_vector_on_support(a, {1, 2, 3, 4});
    CHECK(c2 == vec_of_ints({0, 1, -2, 1, -1, 0, 0}));
    CHECK(is_zero(mat_vec(a, c2)));

    Vec c3 = kernel_vector_on_support(a, {0, 6});
    CHECK(c3 == vec_of_ints({1, 0, 0, 0, 0, 0, -2}));

    // nullity 0 (independent columns) and nullity > 1 both violate the contract
    CHECK_THROWS_AS(kernel_vector_on_support(a, {0, 1}), precondition_error);
    CHECK_THROWS_AS(kernel_vector_on_support(a, {0, 1, 2, 3, 4, 5, 6}), precondition_error);
    CHECK_THROWS_AS(kernel_vector_on_support(a, {}), precondition_error);
    CHECK_THROWS_AS(kernel_vector_on_support(a, {1, 0}), precondition_error);  // unsorted
}

TEST_CASE("subdeterminant matches cofactor expansion on fixtures") {
    Mat m = mat_of_ints({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
    CHECK(detail::subdeterminant(m, {0, 1, 2}, {0, 1, 2}) == -3);
    CHECK(detail::subdeterminant(m, {0, 1}, {0, 1}) == -3);
    CHECK(detail::subdeterminant(m, {0}, {2}) == 3);

    // zero leading pivot requires the internal row swap
    Mat s = mat_of_ints({{0, 1}, {1, 0}});
    CHECK(detail::subdeterminant(s, {0, 1}, {0, 1}) == -1);

    // singular submatrix
    Mat z = mat_of_ints({{1, 2}, {2, 4}});
    CHECK(detail::subdeterminant(z, {0, 1}, {0, 1}) == 0);
}

TEST_CASE("binomial and subset enumeration") {
    CHECK(detail::binomial(7, 3) == 35);
    CHECK(detail::binomial(5, 0) == 1);
    CHECK(detail::binomial(4, 5) == 0);
    int count = 0;
    detail::for_each_subset(5, 2, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 10);
}

TEST_CASE("delta_exact on the demo matrix is 4") {
    CHECK(delta_exact(demo_matrix()) == 4);
}

TEST_CASE("delta_exact small fixtures and budget") {
    CHECK(delta_exact(mat_of_ints({{5}})) == 5);
    CHECK(delta_exact(mat_of_ints({{-7, 2}})) == 7);
    CHECK(delta_exact(mat_of_ints({{1, 0}, {0, 1}})) == 1);
    CHECK(delta_exact(mat_of_ints({{2, 1}, {1, 2}})) == 3);
    CHECK(delta_exact(Mat(2, 2)) == 0);
    CHECK_THROWS_AS(delta_exact(demo_matrix(), Int(3)), budget_error);
    Mat frac(1, 1);
    frac.at(0, 0) = Rat(1, 2);
    CHECK_THROWS_AS(delta_exact(frac), precondition_error);
}

TEST_CASE("delta_exact dominates every subdeterminant by construction") {
    for (std::uint64_t seed = 50; seed < 70; ++seed) {
        Mat a = random_small_matrix(seed, 2 + (int)(seed % 2), 3, 3);
        Int d = delta_exact(a);
        Int seen = 0;
        for (int k = 1; k <= std::min(a.rows, a.cols); ++k)
            detail::for_each_subset(a.rows, k, [&](const std::vector<int>& ri) {
                detail::for_each_subset(a.cols, k, [&](const std::vector<int>& ci) {
                    seen = std::max(seen, abs_int(detail::subdeterminant(a, ri, ci)));
                });
            });
        CAPTURE(seed);
        CHECK(d == seen);
    }
}

TEST_CASE("delta_bound is an upper bound with the published closed form") {
    // even row count: amax^m * m^(m/2) exactly
    Mat two = mat_of_ints({{3, 1, 0}, {2, -3, 1}});
    CHECK(delta_bound(two) == 18);  // 3^2 * 2
    // odd row count: smallest integer whose square covers amax^(2m) * m^m
    Mat three = demo_matrix();
    CHECK(delta_bound(three) == 42);  // ceil(2^3 * 3^(3/2)) = ceil(41.56...)
    Mat one = mat_of_ints({{-7, 2}});
    CHECK(delta_bound(one) == 7);
    CHECK(delta_bound(Mat(2, 2)) == 0);
    // bound dominates the exact value
    for (std::uint64_t seed = 80; seed < 100; ++seed) {
        Mat a = random_small_matrix(seed, 1 + (int)(seed % 3), 1 + (int)(seed % 4), 3);
        CAPTURE(seed);
        CHECK(delta_bound(a) >= delta_exact(a));
    }
}
