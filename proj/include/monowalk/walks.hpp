#ifndef MONOWALK_WALKS_HPP
#define MONOWALK_WALKS_HPP

// Augmentation walks: circuit walks over LP relaxations (geometric-decay
// phase followed by face descent to a vertex) and Graver walks over IPs,
// plus the Graver decomposition they step along and independent verifiers
// that re-check every certificate invariant from scratch.

#include "circuits.hpp"
#include "ip.hpp"

#include <string>
#include <vector>

namespace monowalk {

enum class Phase { Decay, Descent, Trivial };
enum class WalkMode { Circuit, Graver };
enum class DeltaMode { Auto, Exact, Bound };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Decay: return "decay";
        case Phase::Descent: return "descent";
        default: return "trivial";
    }
}

inline const char* mode_name(WalkMode m) {
    return m == WalkMode::Circuit ? "circuit" : "graver";
}

struct WalkStep {
    Vec direction;
    Rat multiplier;  // the move is multiplier * direction; always > 0
    Phase phase = Phase::Decay;
    Rat objective_after;
};

struct WalkCertificate {
    LpInstance instance;
    Vec start;
    std::vector<WalkStep> steps;
    Vec terminal;
    WalkMode mode = WalkMode::Circuit;
};

struct WalkOptions {
    DeltaMode delta_mode = DeltaMode::Auto;  // exact within budget, else bound
    long steps_limit = 0;                    // 0: derive a generous guard
    Int delta_budget = Int(1000000);
};

struct degenerate_step_error : error {
    explicit degenerate_step_error(const std::string& m) : error(m) {}
};

// Largest alpha > 0 with l <= x + alpha c <= u (largest integer alpha when
// integral), as the min over coordinates of the slack-to-rate quotient.
// A zero maximum (x at a bound blocking c) is signalled, not returned.
inline Rat max_step(const Vec& x, const Vec& c, const Vec& l, const Vec& u,
                    bool integral = false) {
    const std::size_t n = x.size();
    if (c.size() != n || l.size() != n || u.size() != n)
        throw precondition_error("max_step: dimension mismatch");
    if (is_zero(c)) throw precondition_error("max_step: zero direction");
    bool bounded = false;
    Rat best;
    for (std::size_t j = 0; j < n; ++j) {
        if (x[j] < l[j] || x[j] > u[j]) throw precondition_error("max_step: x outside box");
        if (c[j] == 0) continue;
        Rat cap = c[j] > 0 ? Rat((u[j] - x[j]) / c[j]) : Rat((l[j] - x[j]) / c[j]);
        if (!bounded || cap < best) {
            bounded = true;
            best = cap;
        }
    }
    if (!bounded) throw internal_error("max_step: unbounded direction");  // finite box: unreachable
    if (integral) best = Rat(rat_floor(best));
    if (best <= 0) throw degenerate_step_error("max_step: blocked at zero");
    return best;
}

namespace detail {

// Smallest k >= 0 with elo^k >= q for a rational lower bound elo of e;
// equals ceil(ln q) unless ln q lies within ~4e-10 of an integer.
inline Int ceil_ln(const Rat& q) {
    if (q <= 1) return 0;
    const Rat elo(Int(2718281828LL), Int(1000000000LL));
    Rat p = 1;
    Int k = 0;
    while (p < q) {
        p *= elo;
        ++k;
    }
    return k;
}

inline Int resolve_delta(const Mat& a, const WalkOptions& opt) {
    switch (opt.delta_mode) {
        case DeltaMode::Exact: return delta_exact(a, opt.delta_budget);
        case DeltaMode::Bound: return delta_bound(a);
        default: break;
    }
    try {
        return delta_exact(a, opt.delta_budget);
    } catch (const budget_error&) {
        return delta_bound(a);
    }
}

inline long clamp_guard(const Int& g) {
    return g > 1000000000 ? 1000000000L : g.convert_to<long>();
}

// Zero-matrix walk: the box itself is the feasible set and +-e_j are its
// circuits (and Graver elements), so push each weighted coordinate to its
// favored bound, one coordinate per step.
inline void trivial_walk(const LpInstance& inst, Vec& x, std::vector<WalkStep>& steps) {
    const int n = inst.a.cols;
    for (int j = 0; j < n; ++j) {
        if (inst.w[j] == 0) continue;
        Rat target = inst.w[j] > 0 ? inst.u[j] : inst.l[j];
        Rat move = abs_rat(target - x[j]);
        if (move == 0) continue;
        Vec d(n, Rat(0));
        d[j] = inst.w[j] > 0 ? 1 : -1;
        x[j] = target;
        steps.push_back({d, move, Phase::Trivial, dot(inst.w, x)});
    }
}

}  // namespace detail

// Feasible point whose strictly-inside columns are linearly independent.
inline bool is_vertex(const LpInstance& inst, const Vec& x) {
    if (!is_feasible(inst, x)) return false;
    std::vector<int> free_set;
    for (int j = 0; j < inst.a.cols; ++j)
        if (inst.l[j] < x[j] && x[j] < inst.u[j]) free_set.push_back(j);
    return free_set.empty() || rank_of_columns(inst.a, free_set) == (int)free_set.size();
}

// Circuit walk to an optimal point: decay phase steps along the best term of
// the conformal circuit decomposition of x_opt - x until the gap drops below
// 1/delta, then face descent walks to a vertex. Vertex objectives can sit
// closer together than 1/delta, so a non-optimal vertex is still possible
// after descent; one more improving decay step and a fresh descent repair
// that, and vertex objectives strictly increase across repair rounds.
inline WalkCertificate circuit_walk(const LpInstance& inst, const Vec& x0,
                                    const WalkOptions& opt = {}) {
    validate_instance(inst);
    if (!is_feasible(inst, x0)) throw precondition_error("circuit_walk: x0 not feasible");
    WalkCertificate cert{inst, x0, {}, x0, WalkMode::Circuit};
    Vec x = x0;
    if (is_zero(inst.a)) {
        detail::trivial_walk(inst, x, cert.steps);
        cert.terminal = x;
        return cert;
    }
    LpSolution sol = solve_lp(inst);
    if (sol.status != SolveStatus::Optimal)
        throw internal_error("circuit_walk: relaxation infeasible with feasible x0");
    const Rat zstar = sol.objective;
    Rat gap = zstar - dot(inst.w, x);
    if (gap < 0) throw internal_error("circuit_walk: objective above optimum");
    if (gap == 0) return cert;  // already optimal: empty walk
    const int n = inst.a.cols;
    const Int dhat = detail::resolve_delta(inst.a, opt);
    if (dhat < 1) throw internal_error("circuit_walk: zero delta for nonzero matrix");
    const Rat threshold(Int(1), dhat);
    long guard = opt.steps_limit;
    if (guard <= 0) {
        Int k = detail::ceil_ln(Rat(dhat) * gap);
        guard = detail::clamp_guard(4 * (Int(n) * (k + 2) + n) + 64);
    }
    auto bump = [&] {
        if ((long)cert.steps.size() >= guard)
            throw internal_error("circuit_walk: step guard exceeded");
    };
    auto decay_step = [&] {
        bump();
        Vec h = sub(sol.x, x);
        CircuitDecomposition cd = conformal_circuit_decomposition(inst.a, h);
        int best = 0;
        Rat bestval = dot(inst.w, cd.terms[0]);
        for (int k = 1; k < (int)cd.terms.size(); ++k) {
            Rat v = dot(inst.w, cd.terms[k]);
            if (v > bestval) {
                best = k;
                bestval = v;
            }
        }
        Rat alpha = max_step(x, cd.terms[best], inst.l, inst.u);
        x = add(x, scale(alpha, cd.terms[best]));
        gap = zstar - dot(inst.w, x);
        cert.steps.push_back({cd.terms[best], alpha, Phase::Decay, dot(inst.w, x)});
    };
    auto descend = [&] {
        while (true) {
            std::vector<int> free_set;
            for (int j = 0; j < n; ++j)
                if (inst.l[j] < x[j] && x[j] < inst.u[j]) free_set.push_back(j);
            if (free_set.empty()) return;
            if (rank_of_columns(inst.a, free_set) == (int)free_set.size()) return;
            bump();
            std::vector<int> csupp = find_matroid_circuit(inst.a, free_set);
            Vec c = kernel_vector_on_support(inst.a, csupp);
            if (dot(inst.w, c) < 0) c = neg(c);
            Rat alpha;
            try {
                alpha = max_step(x, c, inst.l, inst.u);
            } catch (const degenerate_step_error&) {
                // unreachable by strict interiority of the free set; defended
                c = neg(c);
                alpha = max_step(x, c, inst.l, inst.u);
            }
            x = add(x, scale(alpha, c));
            gap = zstar - dot(inst.w, x);
            cert.steps.push_back({c, alpha, Phase::Descent, dot(inst.w, x)});
        }
    };
    while (true) {
        while (gap >= threshold) decay_step();
        descend();
        if (gap == 0) break;
        decay_step();
    }
    cert.terminal = x;
    return cert;
}

struct GraverTerm {
    Int multiplier;  // positive integer
    Vec direction;   // integer Graver element
};

struct GraverDecomposition {
    Vec h;
    std::vector<GraverTerm> terms;
};

// h as a positive integer combination of Graver elements conformal to it:
// floor parts of the conformal circuit decomposition (primitive circuits are
// Graver elements), then the integer residual is exhausted by repeatedly
// extracting a smallest conformal Graver element and its maximal multiple.
inline GraverDecomposition graver_decomposition(const Mat& a, const Vec& h, const Int& dhat) {
    detail::check_kernel_vector(a, h, "graver_decomposition");
    if (dhat < 1) throw precondition_error("graver_decomposition: dhat must be >= 1");
    GraverDecomposition out;
    out.h = h;
    Vec f = h;
    CircuitDecomposition cd = conformal_circuit_decomposition(a, h);
    for (const Vec& term : cd.terms) {
        Vec d;
        Rat alpha;
        primitive_direction(term, d, alpha);
        Int lam = rat_floor(alpha);
        if (lam >= 1) {
            out.terms.push_back({lam, d});
            f = sub(f, scale(Rat(lam), d));
        }
    }
    const Int cap = 2 * Int(a.cols) * Int(a.cols) * dhat;
    while (!is_zero(f)) {
        if (!is_integral(f)) throw internal_error("graver_decomposition: non-integer residual");
        Vec g = extract_graver(a, f);
        Int mu;
        bool first = true;
        for (int j : support(g)) {
            Int q = num(f[j]) / num(g[j]);  // same signs and |f_j| >= |g_j|: q >= 1
            if (first || q < mu) {
                mu = q;
                first = false;
            }
        }
        out.terms.push_back({mu, g});
        f = sub(f, scale(Rat(mu), g));
        if (Int(out.terms.size()) > cap)
            throw internal_error("graver_decomposition: term bound exceeded");
    }
    return out;
}

inline ValidationReport validate_graver_decomposition(const Mat& a, const Vec& h,
                                                      const GraverDecomposition& gd,
                                                      const Int& dhat,
                                                      const Int& budget = Int(10000000)) {
    ValidationReport rep;
    if ((int)h.size() != a.cols || !is_integral(h) || is_zero(h) || !is_zero(mat_vec(a, h))) {
        rep.fail("h: not a nonzero integer kernel vector");
        return rep;
    }
    Vec acc(h.size(), Rat(0));
    for (std::size_t k = 0; k < gd.terms.size(); ++k) {
        const GraverTerm& t = gd.terms[k];
        std::string tag = "term " + std::to_string(k);
        if (t.multiplier < 1) rep.fail(tag + ": multiplier not a positive integer");
        if ((int)t.direction.size() != a.cols || !is_integral(t.direction)) {
            rep.fail(tag + ": direction not an integer vector");
            continue;
        }
        if (!is_conformal(t.direction, h)) rep.fail(tag + ": not conformal to h");
        if (!is_zero(mat_vec(a, t.direction))) rep.fail(tag + ": not in the kernel");
        try {
            if (!is_graver_element(a, t.direction, budget))
                rep.fail(tag + ": direction not a Graver element");
        } catch (const budget_error&) {
            // conformal box too large to scan: skip the minimality check
        }
        acc = add(acc, scale(Rat(t.multiplier), t.direction));
    }
    if (acc != h) rep.fail("terms do not sum to h");
    if (Int(gd.terms.size()) > 2 * Int(a.cols) * Int(a.cols) * dhat)
        rep.fail("term count exceeds 2 n^2 delta");
    return rep;
}

// Graver walk to an integer optimum: step along the decomposition term with
// the best weighted contribution, by the largest feasible integer multiple.
// The gap is a nonnegative integer that strictly decreases, and once below 1
// it is exactly 0, so the terminal point is optimal with no descent phase.
inline WalkCertificate graver_walk(const LpInstance& inst, const Vec& x0,
                                   const WalkOptions& opt = {}) {
    validate_instance(inst);
    if (!is_feasible(inst, x0, true))
        throw precondition_error("graver_walk: x0 not integer feasible");
    WalkCertificate cert{inst, x0, {}, x0, WalkMode::Graver};
    Vec x = x0;
    if (is_zero(inst.a)) {
        detail::trivial_walk(inst, x, cert.steps);
        cert.terminal = x;
        return cert;
    }
    IpSolution sol = solve_ip(inst);
    if (sol.status != SolveStatus::Optimal)
        throw internal_error("graver_walk: program infeasible with feasible x0");
    const Rat zstar = sol.objective;
    Rat gap = zstar - dot(inst.w, x);
    if (gap < 0 || !is_integer(gap)) throw internal_error("graver_walk: bad gap");
    const int n = inst.a.cols;
    const Int dhat = detail::resolve_delta(inst.a, opt);
    if (dhat < 1) throw internal_error("graver_walk: zero delta for nonzero matrix");
    long guard = opt.steps_limit;
    if (guard <= 0) {
        Int k = detail::ceil_ln(gap);
        if (k < 1) k = 1;
        guard = detail::clamp_guard(4 * Int(n) * Int(n) * dhat * k + 64);
    }
    while (gap >= 1) {
        if ((long)cert.steps.size() >= guard)
            throw internal_error("graver_walk: step guard exceeded");
        Vec h = sub(sol.x, x);
        GraverDecomposition gd = graver_decomposition(inst.a, h, dhat);
        int best = 0;
        Rat bestval = Rat(gd.terms[0].multiplier) * dot(inst.w, gd.terms[0].direction);
        for (int k = 1; k < (int)gd.terms.size(); ++k) {
            Rat v = Rat(gd.terms[k].multiplier) * dot(inst.w, gd.terms[k].direction);
            if (v > bestval) {
                best = k;
                bestval = v;
            }
        }
        const Vec& g = gd.terms[best].direction;
        Rat alpha = max_step(x, g, inst.l, inst.u, true);
        x = add(x, scale(alpha, g));
        gap = zstar - dot(inst.w, x);
        cert.steps.push_back({g, alpha, Phase::Decay, dot(inst.w, x)});
    }
    cert.terminal = x;
    return cert;
}

namespace detail {

inline ValidationReport verify_walk(const LpInstance& inst, const WalkCertificate& cert,
                                    WalkMode mode, const Int& budget) {
    ValidationReport rep;
    try {
        validate_instance(inst);
    } catch (const error& e) {
        rep.fail(std::string("instance: ") + e.what());
        return rep;
    }
    if (cert.mode != mode) {
        rep.fail(std::string("mode: certificate is ") + mode_name(cert.mode) + ", expected " +
                 mode_name(mode));
        return rep;
    }
    const bool graver = mode == WalkMode::Graver;
    const int n = inst.a.cols;
    if ((int)cert.start.size() != n) {
        rep.fail("start: dimension mismatch");
        return rep;
    }
    if (!is_feasible(inst, cert.start, graver)) {
        rep.fail("start: not feasible");
        return rep;
    }
    Vec x = cert.start;
    for (std::size_t k = 0; k < cert.steps.size(); ++k) {
        const WalkStep& s = cert.steps[k];
        std::string tag = "step " + std::to_string(k);
        if ((int)s.direction.size() != n) {
            rep.fail(tag + ": dimension mismatch");
            return rep;
        }
        if (is_zero(s.direction)) {
            rep.fail(tag + ": zero direction");
            return rep;
        }
        if (s.multiplier <= 0) rep.fail(tag + ": multiplier not positive");
        if (graver) {
            if (!is_integral(s.direction)) rep.fail(tag + ": direction not integer");
            if (!is_integer(s.multiplier)) rep.fail(tag + ": multiplier not integer");
        }
        Vec next = add(x, scale(s.multiplier, s.direction));
        bool base_ok = is_feasible(inst, x, graver);
        if (!is_feasible(inst, next, graver)) rep.fail(tag + ": infeasible point");
        if (s.objective_after != dot(inst.w, next)) rep.fail(tag + ": objective_after mismatch");
        Rat before = dot(inst.w, x), after = dot(inst.w, next);
        if (s.phase == Phase::Descent) {
            if (after < before) rep.fail(tag + ": objective decreases in descent phase");
        } else if (after <= before) {
            rep.fail(tag + ": objective not strictly increasing");
        }
        if (base_ok && s.multiplier > 0) {
            // maximality: one more epsilon (unit, in graver mode) is infeasible
            try {
                if (s.multiplier != max_step(x, s.direction, inst.l, inst.u, graver))
                    rep.fail(tag + ": step not maximal");
            } catch (const error&) {
                rep.fail(tag + ": step not maximal");
            }
            Vec p;
            Rat alpha;
            primitive_direction(s.direction, p, alpha);
            if (graver) {
                try {
                    if (!is_graver_element(inst.a, p, budget))
                        rep.fail(tag + ": direction not a Graver element");
                } catch (const budget_error&) {
                    // box too large to scan: minimality check skipped
                }
            } else if (!is_circuit(inst.a, p)) {
                rep.fail(tag + ": direction not a circuit");
            }
        }
        x = next;
    }
    if ((int)cert.terminal.size() != n || cert.terminal != x) {
        rep.fail("terminal: does not match replay");
        return rep;
    }
    Rat reached = dot(inst.w, x);
    if (graver) {
        IpSolution sol = solve_ip(inst);
        if (sol.status != SolveStatus::Optimal || sol.objective != reached)
            rep.fail("terminal not optimal");
    } else {
        LpSolution sol = solve_lp(inst);
        if (sol.status != SolveStatus::Optimal || sol.objective != reached)
            rep.fail("terminal not optimal");
    }
    return rep;
}

}  // namespace detail

inline ValidationReport verify_circuit_walk(const LpInstance& inst, const WalkCertificate& cert) {
    return detail::verify_walk(inst, cert, WalkMode::Circuit, Int(0));
}

inline ValidationReport verify_graver_walk(const LpInstance& inst, const WalkCertificate& cert,
                                           const Int& budget = Int(10000000)) {
    return detail::verify_walk(inst, cert, WalkMode::Graver, budget);
}

}  // namespace monowalk

#endif
