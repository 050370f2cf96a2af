#ifndef MONOWALK_IP_HPP
#define MONOWALK_IP_HPP

// Exact integer programming over boxes: branch-and-bound on the exact LP
// relaxation, plus the auxiliary programs that extract Graver elements from
// a kernel vector, conformal-minimality testing, and a brute-force oracle.

#include "lp.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <vector>

namespace monowalk {

struct IpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Vec x;          // integer point when optimal
    Rat objective;  // wx when optimal (integer-valued for integer data)
    long nodes = 0;
};

// Branch and bound: best-bound node order (ties deeper first, then creation
// order), branching on the lowest-index fractional coordinate.
inline IpSolution solve_ip(const LpInstance& inst) {
    validate_instance(inst);
    const int n = inst.a.cols;

    struct Node {
        Rat bound;
        Vec relax;  // LP relaxation optimum
        Vec lo, hi;
        int depth = 0;
        long id = 0;
    };
    struct Order {
        bool operator()(const Node& a, const Node& b) const {
            if (a.bound != b.bound) return a.bound < b.bound;  // larger bound first
            if (a.depth != b.depth) return a.depth < b.depth;  // deeper first
            return a.id > b.id;                                // earlier first
        }
    };

    IpSolution out;
    std::priority_queue<Node, std::vector<Node>, Order> open;
    long created = 0;
    bool have_inc = false;
    Rat inc_obj;
    Vec inc_x;

    auto push_node = [&](Vec lo, Vec hi, int depth) {
        LpInstance relax{inst.a, inst.b, lo, hi, inst.w};
        LpSolution lp = solve_lp(relax);
        ++out.nodes;
        if (lp.status != SolveStatus::Optimal) return;
        if (have_inc && lp.objective <= inc_obj) return;
        open.push(Node{lp.objective, lp.x, std::move(lo), std::move(hi), depth, created++});
    };

    push_node(inst.l, inst.u, 0);
    while (!open.empty()) {
        Node nd = open.top();
        open.pop();
        if (have_inc && nd.bound <= inc_obj) break;  // best bound can't improve
        int frac = -1;
        for (int j = 0; j < n; ++j)
            if (!is_integer(nd.relax[j])) { frac = j; break; }
        if (frac < 0) {
            if (!have_inc || nd.bound > inc_obj) {
                have_inc = true;
                inc_obj = nd.bound;
                inc_x = nd.relax;
            }
            continue;
        }
        Vec lo = nd.lo, hi = nd.hi;
        hi[frac] = Rat(rat_floor(nd.relax[frac]));
        push_node(nd.lo, std::move(hi), nd.depth + 1);
        lo[frac] = Rat(rat_ceil(nd.relax[frac]));
        push_node(std::move(lo), nd.hi, nd.depth + 1);
        if (out.nodes > 10000000) throw internal_error("solve_ip: node limit exceeded");
    }
    if (have_inc) {
        out.status = SolveStatus::Optimal;
        out.x = inc_x;
        out.objective = inc_obj;
    }
    return out;
}

// Exhaustive lattice scan of the box, in lexicographic order, with interval
// pruning on the unscanned suffix (prunes only infeasible subtrees, so the
// first maximizer found is the lexicographically smallest one).
inline IpSolution brute_force_ip(const LpInstance& inst, const Int& budget = Int(10000000)) {
    validate_instance(inst);
    const int m = inst.a.rows, n = inst.a.cols;
    Int points = 1;
    for (int j = 0; j < n; ++j) {
        points *= num(inst.u[j]) - num(inst.l[j]) + 1;
        if (points > budget)
            throw budget_error("brute_force_ip: box exceeds budget " + budget.str());
    }
    // suffix_min/max[i][j]: extreme contribution of coordinates j..n-1 to row i.
    std::vector<Vec> suffix_min(m, Vec(n + 1, Rat(0))), suffix_max(m, Vec(n + 1, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int j = n - 1; j >= 0; --j) {
            Rat c = inst.a.at(i, j);
            Rat a1 = c * inst.l[j], a2 = c * inst.u[j];
            suffix_min[i][j] = suffix_min[i][j + 1] + std::min(a1, a2);
            suffix_max[i][j] = suffix_max[i][j + 1] + std::max(a1, a2);
        }
    IpSolution out;
    bool have = false;
    Rat best_obj;
    Vec best_x, x(n, Rat(0)), partial(m, Rat(0));
    auto rec = [&](auto&& self, int j, const Rat& obj) -> void {
        if (j == n) {
            if (partial == inst.b && (!have || obj > best_obj)) {
                have = true;
                best_obj = obj;
                best_x = x;
            }
            return;
        }
        for (int i = 0; i < m; ++i) {
            Rat rem = inst.b[i] - partial[i];
            if (rem < suffix_min[i][j] || rem > suffix_max[i][j]) return;
        }
        for (Int v = num(inst.l[j]); v <= num(inst.u[j]); ++v) {
            x[j] = Rat(v);
            for (int i = 0; i < m; ++i) partial[i] += inst.a.at(i, j) * x[j];
            self(self, j + 1, obj + inst.w[j] * x[j]);
            for (int i = 0; i < m; ++i) partial[i] -= inst.a.at(i, j) * x[j];
        }
        x[j] = 0;
    };
    rec(rec, 0, Rat(0));
    if (have) {
        out.status = SolveStatus::Optimal;
        out.x = best_x;
        out.objective = best_obj;
    }
    return out;
}

namespace detail {

inline void check_kernel_vector(const Mat& a, const Vec& h, const char* who) {
    if ((int)h.size() != a.cols) throw precondition_error(std::string(who) + ": size mismatch");
    if (!is_integral(h)) throw precondition_error(std::string(who) + ": h must be integer");
    if (is_zero(h)) throw precondition_error(std::string(who) + ": h must be nonzero");
    if (!is_zero(mat_vec(a, h))) throw precondition_error(std::string(who) + ": Ah != 0");
}

// Shared frame for the extraction programs: substitute y_j = sigma_j x_j so
// the feasible region becomes a box 0 <= y <= |h| with matrix column j scaled
// by sigma_j, and minimizing the 1-norm becomes maximizing -sum y.
struct SignedFrame {
    std::vector<int> sigma;
    Mat a_signed;
    Vec box;  // |h|

    SignedFrame(const Mat& a, const Vec& h) : a_signed(a.rows, a.cols) {
        sigma.resize(a.cols);
        box.resize(a.cols);
        for (int j = 0; j < a.cols; ++j) {
            sigma[j] = h[j] < 0 ? -1 : 1;
            box[j] = abs_rat(h[j]);
            for (int i = 0; i < a.rows; ++i)
                a_signed.at(i, j) = Rat(sigma[j]) * a.at(i, j);
        }
    }

    Vec unsign(const Vec& y) const {
        Vec x(sigma.size());
        for (std::size_t j = 0; j < sigma.size(); ++j) x[j] = Rat(sigma[j]) * y[j];
        return x;
    }
};

}  // namespace detail

// Smallest-1-norm nonzero integer kernel vector conformal to h, found by one
// integer program: min sum(y) s.t. A_signed y = 0, sum(y) >= 1, 0 <= y <= |h|,
// with the inequality carried by one appended row and slack column.
// The result is a Graver element. Pre: h integer, nonzero, Ah = 0.
inline Vec extract_graver(const Mat& a, const Vec& h) {
    detail::check_kernel_vector(a, h, "extract_graver");
    detail::SignedFrame fr(a, h);
    const int m = a.rows, n = a.cols;
    LpInstance aux;
    aux.a = Mat(m + 1, n + 1);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) aux.a.at(i, j) = fr.a_signed.at(i, j);
    for (int j = 0; j < n; ++j) aux.a.at(m, j) = 1;
    aux.a.at(m, n) = -1;  // sum(y) - slack = 1
    aux.b.assign(m + 1, Rat(0));
    aux.b[m] = 1;
    aux.l.assign(n + 1, Rat(0));
    aux.u = fr.box;
    aux.u.push_back(norm1(h) - 1);
    aux.w.assign(n + 1, Rat(-1));
    aux.w[n] = 0;
    IpSolution sol = solve_ip(aux);
    if (sol.status != SolveStatus::Optimal)
        throw internal_error("extract_graver: auxiliary program infeasible");
    Vec y(sol.x.begin(), sol.x.begin() + n);
    Vec g = fr.unsign(y);
    if (is_zero(g) || !is_conformal(g, h) || !is_zero(mat_vec(a, g)))
        throw internal_error("extract_graver: bad extraction");
    return g;
}

// Same optimum via n standard-form programs (no appended row): program k
// requires y_k >= 1. Merged by smallest 1-norm, ties to the lowest k.
inline Vec extract_graver_standard_form(const Mat& a, const Vec& h) {
    detail::check_kernel_vector(a, h, "extract_graver_standard_form");
    detail::SignedFrame fr(a, h);
    const int n = a.cols;
    std::optional<Vec> best;
    Rat best_norm;
    for (int k = 0; k < n; ++k) {
        if (fr.box[k] < 1) continue;  // y_k >= 1 unsatisfiable
        LpInstance aux;
        aux.a = fr.a_signed;
        aux.b.assign(a.rows, Rat(0));
        aux.l.assign(n, Rat(0));
        aux.l[k] = 1;
        aux.u = fr.box;
        aux.w.assign(n, Rat(-1));
        IpSolution sol = solve_ip(aux);
        if (sol.status != SolveStatus::Optimal) continue;
        Rat nrm = -sol.objective;
        if (!best || nrm < best_norm) {
            best = fr.unsign(sol.x);
            best_norm = nrm;
        }
    }
    if (!best) throw internal_error("extract_graver_standard_form: no program feasible");
    return *best;
}

// True iff g is a nonzero integer kernel vector with no smaller conformal
// kernel vector below it: no f != 0, f != g, Af = 0 with each f_i between 0
// and g_i. Checked by scanning the conformal box (budget-guarded).
inline bool is_graver_element(const Mat& a, const Vec& g, const Int& budget = Int(10000000)) {
    if ((int)g.size() != a.cols) throw precondition_error("is_graver_element: size mismatch");
    if (!is_integral(g)) throw precondition_error("is_graver_element: g must be integer");
    if (is_zero(g)) return false;
    if (!is_zero(mat_vec(a, g))) return false;
    const int n = a.cols, m = a.rows;
    Int points = 1;
    for (int j = 0; j < n; ++j) {
        points *= abs_int(num(g[j])) + 1;
        if (points > budget)
            throw budget_error("is_graver_element: conformal box exceeds budget " + budget.str());
    }
    Vec f(n, Rat(0)), partial(m, Rat(0));
    bool found = false;
    auto rec = [&](auto&& self, int j) -> void {
        if (found) return;
        if (j == n) {
            if (!is_zero(partial)) return;
            if (is_zero(f) || f == g) return;
            found = true;
            return;
        }
        Int step = num(g[j]) < 0 ? -1 : 1;
        Int count = abs_int(num(g[j]));
        for (Int t = 0; t <= count && !found; ++t) {
            f[j] = Rat(t * step);
            for (int i = 0; i < m; ++i) partial[i] += a.at(i, j) * f[j];
            self(self, j + 1);
            for (int i = 0; i < m; ++i) partial[i] -= a.at(i, j) * f[j];
        }
        f[j] = 0;
    };
    rec(rec, 0);
    return !found;
}

}  // namespace monowalk

#endif
