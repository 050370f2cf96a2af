#ifndef MONOWALK_HARDNESS_HPP
#define MONOWALK_HARDNESS_HPP

// Subset-sum reductions: single-row instances on which Graver membership and
// Graver-walk length encode subset-sum answers, plus a brute-force subset-sum
// oracle and seeded instance generators for fuzzing.

#include "lp.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace monowalk {

struct SubsetSumInstance {
    Int a0;               // target, >= 1
    std::vector<Int> a;   // item values a_1..a_r, all >= 1
};

inline void validate_subset_sum(const SubsetSumInstance& s) {
    if (s.a0 < 1) throw precondition_error("subset sum: target must be >= 1");
    if (s.a.empty()) throw precondition_error("subset sum: no items");
    for (const Int& v : s.a)
        if (v < 1) throw precondition_error("subset sum: items must be >= 1");
}

// A = [a_1,...,a_r, -a0, a0 - sum(a)] and h = all-ones; Ah = 0 by
// construction, and h is a Graver element iff no subset of a sums to a0.
inline std::pair<Mat, Vec> reduce_to_graver_instance(const SubsetSumInstance& s) {
    validate_subset_sum(s);
    const int r = (int)s.a.size();
    Mat a(1, r + 2);
    Int total = 0;
    for (int j = 0; j < r; ++j) {
        a.at(0, j) = Rat(s.a[j]);
        total += s.a[j];
    }
    a.at(0, r) = Rat(-s.a0);
    a.at(0, r + 1) = Rat(s.a0 - total);
    return {a, Vec((std::size_t)r + 2, Rat(1))};
}

struct WalkReduction {
    LpInstance inst;  // b = 0, l = 0, u = w = all-ones
    Vec x0;           // all-zeros, feasible
    Vec xbar;         // all-ones, the unique optimum
};

// The walk form of the same reduction: maximizing the all-ones objective
// over {x : Ax = 0, 0 <= x <= 1} from x0 = 0 reaches the unique optimum
// all-ones in one Graver step iff no subset of a sums to a0.
inline WalkReduction reduce_to_walk_instance(const SubsetSumInstance& s) {
    auto [a, h] = reduce_to_graver_instance(s);
    const std::size_t n = h.size();
    WalkReduction out;
    out.inst = LpInstance{a, Vec(1, Rat(0)), Vec(n, Rat(0)), h, h};
    out.x0 = Vec(n, Rat(0));
    out.xbar = h;
    return out;
}

// First subset (in increasing bitmask order) summing to the target, as
// 1-based item indices, or nullopt. Exhaustive over all 2^r subsets.
inline std::optional<std::vector<int>> brute_force_subset_sum(const SubsetSumInstance& s,
                                                              const Int& budget = Int(1 << 22)) {
    validate_subset_sum(s);
    const int r = (int)s.a.size();
    Int subsets = Int(1) << r;
    if (subsets > budget)
        throw budget_error("brute_force_subset_sum: 2^r exceeds budget " + budget.str());
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
        Int sum = 0;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) sum += s.a[i];
        if (sum == s.a0) {
            std::vector<int> idx;
            for (int i = 0; i < r; ++i)
                if (mask >> i & 1) idx.push_back(i + 1);
            return idx;
        }
    }
    return std::nullopt;
}

namespace detail {

// mt19937_64 with a modulo range mapping; unlike the std distributions the
// output stream is identical across standard libraries, which keeps seeded
// generation byte-stable.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long long range(long long lo, long long hi) {
        return lo + (long long)(eng() % (std::uint64_t)(hi - lo + 1));
    }
};

}  // namespace detail

// Seeded random subset-sum instance: items uniform in [1, amax]; the target
// is a random nonempty subset sum (yes) or rejection-sampled from
// [1, sum + amax] until no subset matches (no).
inline SubsetSumInstance random_subset_sum_instance(std::uint64_t seed, int r, long long amax,
                                                    bool yes) {
    if (r < 1 || r > 20 || amax < 1)
        throw precondition_error("random_subset_sum_instance: bad shape");
    detail::Rng rng(seed);
    SubsetSumInstance s;
    Int total = 0;
    for (int i = 0; i < r; ++i) {
        s.a.push_back(Int(rng.range(1, amax)));
        total += s.a.back();
    }
    if (yes) {
        long long mask = rng.range(1, (1LL << r) - 1);
        s.a0 = 0;
        for (int i = 0; i < r; ++i)
            if (mask >> i & 1) s.a0 += s.a[i];
        return s;
    }
    long long hi = total.convert_to<long long>() + amax;
    for (int tries = 0; tries < 100000; ++tries) {
        s.a0 = Int(rng.range(1, hi));
        if (!brute_force_subset_sum(s)) return s;
    }
    throw internal_error("random_subset_sum_instance: rejection sampling stalled");
}

struct RandomInstance {
    LpInstance inst;
    Vec x0;  // feasible by construction (b = A x0)
};

// Seeded random box instance: entries uniform in [-amax, amax], bounds
// ordered uniform draws from [blo, bhi], x0 an integer point of the box, and
// b = A x0 so the instance is feasible (and x0 integer-feasible) as built.
// x0 stays integer even for LP use: a fractional x0 would drag b off the
// integer lattice and break the instance invariant.
inline RandomInstance random_instance(std::uint64_t seed, int m, int n, long long amax,
                                      long long blo, long long bhi) {
    if (m < 1 || n < 1 || amax < 0 || blo > bhi)
        throw precondition_error("random_instance: bad shape");
    detail::Rng rng(seed);
    RandomInstance out;
    out.inst.a = Mat(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out.inst.a.at(i, j) = Rat(Int(rng.range(-amax, amax)));
    out.inst.l.resize(n);
    out.inst.u.resize(n);
    out.inst.w.resize(n);
    out.x0.resize(n);
    for (int j = 0; j < n; ++j) {
        long long p = rng.range(blo, bhi), q = rng.range(blo, bhi);
        out.inst.l[j] = Rat(Int(std::min(p, q)));
        out.inst.u[j] = Rat(Int(std::max(p, q)));
        out.inst.w[j] = Rat(Int(rng.range(-9, 9)));
        out.x0[j] = Rat(Int(rng.range(std::min(p, q), std::max(p, q))));
    }
    out.inst.b = mat_vec(out.inst.a, out.x0);
    return out;
}

}  // namespace monowalk

#endif
