#ifndef MONOWALK_CIRCUITS_HPP
#define MONOWALK_CIRCUITS_HPP

// Circuits of a matrix: minimal-support kernel vectors, support-shrinking
// reductions, and the conformal circuit decomposition of a kernel vector.

#include "linalg.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace monowalk {

// c != 0, Ac = 0, and supp(c) is support-minimal, which for a kernel vector
// is equivalent to rank(A^supp) = |supp| - 1.
inline bool is_circuit(const Mat& a, const Vec& c) {
    if ((int)c.size() != a.cols) throw precondition_error("is_circuit: size mismatch");
    if (is_zero(c)) return false;
    if (!is_zero(mat_vec(a, c))) return false;
    std::vector<int> s = support(c);
    return rank_of_columns(a, s) == (int)s.size() - 1;
}

// Greedy lowest-index scan for a minimal dependent column subset of H.
// Pre: the columns indexed by H are dependent (rank(A^H) < |H|).
inline std::vector<int> find_matroid_circuit(const Mat& a, const std::vector<int>& h) {
    if (h.empty()) throw precondition_error("find_matroid_circuit: empty index set");
    std::vector<int> hs = h;
    std::sort(hs.begin(), hs.end());
    if (rank_of_columns(a, hs) >= (int)hs.size())
        throw precondition_error("find_matroid_circuit: columns are independent");
    // Grow J one lowest index at a time while the rank keeps increasing; the
    // first stall makes J = independent set + one dependent element.
    std::vector<int> j{hs[0]};
    int prev_rank = 0;
    std::size_t next = 1;
    while (true) {
        int r = rank_of_columns(a, j);
        if (r == prev_rank) break;
        prev_rank = r;
        if (next >= hs.size())
            throw internal_error("find_matroid_circuit: no stall on dependent set");
        j.push_back(hs[next++]);
    }
    int rj = rank_of_columns(a, j);
    std::vector<int> c;
    for (int drop : j) {
        std::vector<int> rest;
        for (int x : j)
            if (x != drop) rest.push_back(x);
        if (rank_of_columns(a, rest) == rj) c.push_back(drop);
    }
    return c;
}

struct Reduction {
    Vec reduced;  // h' = h - d, dominated by h, strictly smaller support
    Vec step;     // d, the multiple of c (or -c) removed
};

// Removes the best multiple of +-c from h: for each orientation take the
// smallest positive ratio h_i/c_i; use the orientation with the smaller step
// (ties keep +c). The minimizing coordinate becomes the new zero; coordinates
// where c opposes h only grow in magnitude and never flip sign.
inline Reduction reduce_by_circuit(const Vec& h, const Vec& c) {
    if (h.size() != c.size()) throw precondition_error("reduce_by_circuit: size mismatch");
    if (is_zero(c)) throw precondition_error("reduce_by_circuit: zero circuit");
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0 && h[i] == 0)
            throw precondition_error("reduce_by_circuit: supp(c) not inside supp(h)");
    bool have_pos = false, have_neg = false;
    Rat alpha_pos, alpha_neg;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Rat r = h[i] / c[i];
        if (r > 0) {
            if (!have_pos || r < alpha_pos) alpha_pos = r;
            have_pos = true;
        } else if (r < 0) {
            if (!have_neg || -r < alpha_neg) alpha_neg = -r;
            have_neg = true;
        }
    }
    if (!have_pos && !have_neg)
        throw precondition_error("reduce_by_circuit: no feasible step");
    Vec d;
    if (have_pos && (!have_neg || alpha_pos <= alpha_neg))
        d = scale(alpha_pos, c);
    else
        d = scale(alpha_neg, neg(c));
    Reduction out{sub(h, d), std::move(d)};
    if (!is_dominated(out.reduced, h) ||
        support(out.reduced).size() >= support(h).size())
        throw internal_error("reduce_by_circuit: support did not shrink");
    return out;
}

// A scalar multiple of a circuit, supported inside supp(h) and sign-matching
// h. Walks a chain g0 = h, g{k+1} = reduce(gk, circuit in supp(gk)); stops as
// soon as some +-circuit is dominated by h, or when gk itself spans the last
// circuit. The returned vector is not re-normalized. Pre: Ah = 0, h != 0.
inline Vec find_dominated_circuit(const Mat& a, const Vec& h) {
    if ((int)h.size() != a.cols) throw precondition_error("find_dominated_circuit: size mismatch");
    if (is_zero(h)) throw precondition_error("find_dominated_circuit: zero vector");
    if (!is_zero(mat_vec(a, h)))
        throw precondition_error("find_dominated_circuit: h not in kernel");
    Vec g = h;
    // Every reduction keeps g dominated by h and strictly shrinks support.
    while (true) {
        std::vector<int> gsupp = support(g);
        std::vector<int> csupp = find_matroid_circuit(a, gsupp);
        if (csupp.size() == gsupp.size()) return g;  // g is a multiple of this circuit
        Vec c = kernel_vector_on_support(a, csupp);
        if (is_dominated(c, h)) return c;
        Vec nc = neg(c);
        if (is_dominated(nc, h)) return nc;
        g = reduce_by_circuit(g, c).reduced;
        if (is_zero(g)) throw internal_error("find_dominated_circuit: chain hit zero");
    }
}

struct CircuitDecomposition {
    Vec h;                  // the decomposed vector
    std::vector<Vec> terms; // conformal circuit multiples summing to h
};

// h = sum of at most n scalar multiples of circuits, each conformal to h.
// Pre: Ah = 0. h = 0 yields the empty decomposition.
inline CircuitDecomposition conformal_circuit_decomposition(const Mat& a, const Vec& h) {
    if ((int)h.size() != a.cols)
        throw precondition_error("conformal_circuit_decomposition: size mismatch");
    if (!is_zero(mat_vec(a, h)))
        throw precondition_error("conformal_circuit_decomposition: h not in kernel");
    CircuitDecomposition out;
    out.h = h;
    Vec rest = h;
    while (!is_zero(rest)) {
        Vec c = find_dominated_circuit(a, rest);
        Reduction red = reduce_by_circuit(rest, c);
        out.terms.push_back(red.step);
        rest = red.reduced;
        if ((int)out.terms.size() > a.cols)
            throw internal_error("conformal_circuit_decomposition: too many terms");
    }
    return out;
}

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> reasons;

    void fail(std::string r) {
        ok = false;
        reasons.push_back(std::move(r));
    }
};

// Independent check of a claimed decomposition: terms sum to h, each term is
// conformal to h and is a nonzero scalar multiple of a circuit, and there are
// at most n terms.
inline ValidationReport validate_circuit_decomposition(const Mat& a,
                                                       const CircuitDecomposition& cd) {
    ValidationReport rep;
    if ((int)cd.h.size() != a.cols) {
        rep.fail("h size mismatch");
        return rep;
    }
    if ((int)cd.terms.size() > a.cols)
        rep.fail("more than n terms: " + std::to_string(cd.terms.size()));
    Vec acc(cd.h.size(), Rat(0));
    for (std::size_t k = 0; k < cd.terms.size(); ++k) {
        const Vec& t = cd.terms[k];
        std::string tag = "term " + std::to_string(k);
        if (t.size() != cd.h.size()) {
            rep.fail(tag + ": size mismatch");
            continue;
        }
        if (is_zero(t)) {
            rep.fail(tag + ": zero term");
            continue;
        }
        if (!is_conformal(t, cd.h)) rep.fail(tag + ": not conformal to h");
        Vec p;
        Rat alpha;
        primitive_direction(t, p, alpha);
        if (!is_circuit(a, p)) rep.fail(tag + ": not a circuit multiple");
        acc = add(acc, t);
    }
    if (acc != cd.h) rep.fail("terms do not sum to h");
    return rep;
}

}  // namespace monowalk

#endif
