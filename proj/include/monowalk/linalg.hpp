#ifndef MONOWALK_LINALG_HPP
#define MONOWALK_LINALG_HPP

// Exact rational linear algebra: dense matrices, reduced row echelon form,
// column ranks, one-dimensional kernel solves, and subdeterminant maxima.

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace monowalk {

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;  // row-major, rows*cols entries

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((std::size_t)r * c, Rat(0)) {}

    Rat& at(int i, int j) { return a[(std::size_t)i * cols + j]; }
    const Rat& at(int i, int j) const { return a[(std::size_t)i * cols + j]; }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
};

inline Mat mat_of_ints(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) throw precondition_error("mat_of_ints: no rows");
    Mat m((int)rows.size(), (int)rows[0].size());
    for (int i = 0; i < m.rows; ++i) {
        if ((int)rows[i].size() != m.cols) throw precondition_error("mat_of_ints: ragged rows");
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

inline bool is_integral(const Mat& m) {
    for (const auto& q : m.a)
        if (!is_integer(q)) return false;
    return true;
}

inline bool is_zero(const Mat& m) {
    for (const auto& q : m.a)
        if (q != 0) return false;
    return true;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Vec mat_vec(const Mat& m, const Vec& x) {
    if ((int)x.size() != m.cols) throw precondition_error("mat_vec: size mismatch");
    Vec r(m.rows, Rat(0));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m.at(i, j) != 0 && x[j] != 0) r[i] += m.at(i, j) * x[j];
    return r;
}

inline Mat columns(const Mat& m, const std::vector<int>& js) {
    Mat s(m.rows, (int)js.size());
    for (int k = 0; k < (int)js.size(); ++k) {
        int j = js[k];
        if (j < 0 || j >= m.cols) throw precondition_error("columns: index out of range");
        for (int i = 0; i < m.rows; ++i) s.at(i, k) = m.at(i, j);
    }
    return s;
}

struct Rref {
    Mat r;                    // the echelon matrix
    std::vector<int> pivots;  // pivot column per pivot row, ascending
    int rank = 0;
};

// Gauss-Jordan with exact pivots (first nonzero in column; partial pivoting
// is pointless over Q). pivot_limit restricts pivot columns to a prefix,
// which lets [M | I] runs recover the row transform.
inline Rref rref(const Mat& m, int pivot_limit = -1) {
    Rref out;
    out.r = m;
    Mat& r = out.r;
    int limit = pivot_limit < 0 ? m.cols : pivot_limit;
    int prow = 0;
    for (int col = 0; col < limit && prow < r.rows; ++col) {
        int sel = -1;
        for (int i = prow; i < r.rows; ++i)
            if (r.at(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != prow)
            for (int j = 0; j < r.cols; ++j) std::swap(r.at(sel, j), r.at(prow, j));
        Rat piv = r.at(prow, col);
        for (int j = 0; j < r.cols; ++j) r.at(prow, j) /= piv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == prow || r.at(i, col) == 0) continue;
            Rat f = r.at(i, col);
            for (int j = 0; j < r.cols; ++j) r.at(i, j) -= f * r.at(prow, j);
        }
        out.pivots.push_back(col);
        ++prow;
    }
    out.rank = prow;
    return out;
}

inline int rank_of(const Mat& m) { return rref(m).rank; }

inline int rank_of_columns(const Mat& m, const std::vector<int>& js) {
    if (js.empty()) return 0;
    return rank_of(columns(m, js));
}

// The primitive integer kernel vector supported on columns C, first nonzero
// entry positive, embedded into an n-vector. Pre: nullity of A^C is exactly 1
// (i.e. C carries a one-dimensional dependency); anything else throws.
inline Vec kernel_vector_on_support(const Mat& a, const std::vector<int>& c) {
    if (c.empty()) throw precondition_error("kernel_vector_on_support: empty support");
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i - 1] >= c[i]) throw precondition_error("kernel_vector_on_support: support not sorted");
    Mat sub = columns(a, c);
    Rref rr = rref(sub);
    int nullity = sub.cols - rr.rank;
    if (nullity != 1)
        throw precondition_error("kernel_vector_on_support: nullity is " +
                                 std::to_string(nullity) + ", expected 1");
    // Single free column: set it to 1, read pivot entries off the echelon form.
    std::vector<bool> is_pivot(sub.cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    int free_col = -1;
    for (int j = 0; j < sub.cols; ++j)
        if (!is_pivot[j]) { free_col = j; break; }
    Vec y(sub.cols, Rat(0));
    y[free_col] = 1;
    for (int prow = 0; prow < (int)rr.pivots.size(); ++prow)
        y[rr.pivots[prow]] = -rr.r.at(prow, free_col);
    Vec p;
    Rat alpha;
    primitive_direction(y, p, alpha);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) {
            if (p[i] < 0) p = neg(p);
            break;
        }
    Vec full(a.cols, Rat(0));
    for (int k = 0; k < (int)c.size(); ++k) full[c[k]] = p[k];
    return full;
}

namespace detail {

// Fraction-free Bareiss determinant of an integer submatrix of m selected by
// row/col index lists (equal length).
inline Int subdeterminant(const Mat& m, const std::vector<int>& ri, const std::vector<int>& ci) {
    int k = (int)ri.size();
    std::vector<Int> w((std::size_t)k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) w[(std::size_t)i * k + j] = num(m.at(ri[i], ci[j]));
    Int prev = 1;
    int swaps = 0;
    for (int p = 0; p < k - 1; ++p) {
        if (w[(std::size_t)p * k + p] == 0) {
            int sel = -1;
            for (int i = p + 1; i < k; ++i)
                if (w[(std::size_t)i * k + p] != 0) { sel = i; break; }
            if (sel < 0) return 0;
            for (int j = 0; j < k; ++j)
                std::swap(w[(std::size_t)sel * k + j], w[(std::size_t)p * k + j]);
            ++swaps;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j) {
                w[(std::size_t)i * k + j] =
                    (w[(std::size_t)i * k + j] * w[(std::size_t)p * k + p] -
                     w[(std::size_t)i * k + p] * w[(std::size_t)p * k + j]) / prev;
            }
        prev = w[(std::size_t)p * k + p];
    }
    Int d = w[(std::size_t)(k - 1) * k + (k - 1)];
    return swaps % 2 ? Int(-d) : d;
}

inline Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

template <typename F>
inline void for_each_subset(int n, int k, F&& f) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// Exact max |det| over all square submatrices, by enumeration. The number of
// determinant evaluations is counted up front against the budget.
inline Int delta_exact(const Mat& a, const Int& budget = Int(1000000)) {
    if (!is_integral(a)) throw precondition_error("delta_exact: matrix must be integer");
    int kmax = std::min(a.rows, a.cols);
    Int count = 0;
    for (int k = 1; k <= kmax; ++k)
        count += detail::binomial(a.rows, k) * detail::binomial(a.cols, k);
    if (count > budget)
        throw budget_error("delta_exact: " + count.str() + " determinants exceeds budget " +
                           budget.str());
    Int best = 0;
    for (int k = 1; k <= kmax; ++k) {
        detail::for_each_subset(a.rows, k, [&](const std::vector<int>& ri) {
            detail::for_each_subset(a.cols, k, [&](const std::vector<int>& ci) {
                Int d = abs_int(detail::subdeterminant(a, ri, ci));
                if (d > best) best = d;
            });
        });
    }
    return best;
}

// Hadamard-type upper bound ceil(max|a_ij|^m * m^(m/2)), computed exactly:
// for odd m the square root is resolved via an integer square root of
// (max^m * m^((m-1)/2))^2 * m.
inline Int delta_bound(const Mat& a) {
    if (!is_integral(a)) throw precondition_error("delta_bound: matrix must be integer");
    if (a.rows < 1) throw precondition_error("delta_bound: empty matrix");
    Int amax = 0;
    for (const auto& q : a.a) amax = std::max(amax, abs_int(num(q)));
    if (amax == 0) return 0;
    int m = a.rows;
    Int base = 1;
    for (int i = 0; i < m; ++i) base *= amax;
    Int mm = m;
    if (m % 2 == 0) {
        for (int i = 0; i < m / 2; ++i) base *= mm;
        return base;
    }
    for (int i = 0; i < (m - 1) / 2; ++i) base *= mm;
    // smallest z with z^2 >= base^2 * m
    Int target = base * base * mm;
    Int z = boost::multiprecision::sqrt(target);
    if (z * z < target) ++z;
    return z;
}

}  // namespace monowalk

#endif
