#ifndef MONOWALK_LP_HPP
#define MONOWALK_LP_HPP

// Exact linear programming over boxes: max { wx : Ax = b, l <= x <= u } with
// integer data, solved by a two-phase bounded-variable simplex with Bland's
// rule. Every pivot is exact rational arithmetic; with finite boxes the
// status is only ever optimal or infeasible.

#include "linalg.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace monowalk {

struct LpInstance {
    Mat a;  // m x n, integer
    Vec b;  // m, integer
    Vec l;  // n, integer, l <= u
    Vec u;  // n, integer
    Vec w;  // n, integer objective
};

inline void validate_instance(const LpInstance& inst) {
    const int m = inst.a.rows, n = inst.a.cols;
    if (m < 1 || n < 1) throw precondition_error("instance: empty matrix");
    if ((int)inst.b.size() != m) throw precondition_error("instance: b size != m");
    if ((int)inst.l.size() != n || (int)inst.u.size() != n || (int)inst.w.size() != n)
        throw precondition_error("instance: bound/objective size != n");
    if (!is_integral(inst.a) || !is_integral(inst.b) || !is_integral(inst.l) ||
        !is_integral(inst.u) || !is_integral(inst.w))
        throw precondition_error("instance: data must be integer");
    for (int j = 0; j < n; ++j)
        if (inst.l[j] > inst.u[j])
            throw precondition_error("instance: l > u at index " + std::to_string(j));
}

inline bool is_feasible(const LpInstance& inst, const Vec& x, bool integral = false) {
    if ((int)x.size() != inst.a.cols) return false;
    for (int j = 0; j < inst.a.cols; ++j) {
        if (x[j] < inst.l[j] || x[j] > inst.u[j]) return false;
        if (integral && !is_integer(x[j])) return false;
    }
    return mat_vec(inst.a, x) == inst.b;
}

enum class SolveStatus { Optimal, Infeasible };

struct LpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    Vec x;          // structural values (basic solution) when optimal
    Rat objective;  // wx when optimal
    long pivots = 0;
};

namespace detail {

// Bounded-variable simplex state over n structural + m artificial variables.
// Artificial j starts basic with an infinite upper bound; once it leaves the
// basis (always at value 0) it is pinned to [0,0] and can never re-enter.
class Simplex {
public:
    explicit Simplex(const LpInstance& inst) : inst_(inst) {
        m_ = inst.a.rows;
        n_ = inst.a.cols;
        nv_ = n_ + m_;
        lo_.assign(nv_, Rat(0));
        hi_.assign(nv_, Rat(0));
        unbounded_hi_.assign(nv_, false);
        at_upper_.assign(nv_, false);
        for (int j = 0; j < n_; ++j) {
            lo_[j] = inst.l[j];
            hi_[j] = inst.u[j];
        }
        // Residual of the all-at-lower point decides each artificial's sign.
        Vec r = inst.b;
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < n_; ++j)
                if (inst.a.at(i, j) != 0) r[i] -= inst.a.at(i, j) * inst.l[j];
        basis_.resize(m_);
        in_basis_.assign(nv_, false);
        row_of_.assign(nv_, -1);
        t_.assign((std::size_t)m_ * nv_, Rat(0));
        beta_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            int s = r[i] < 0 ? -1 : 1;
            for (int j = 0; j < n_; ++j) t_[(std::size_t)i * nv_ + j] = s * inst.a.at(i, j);
            t_[(std::size_t)i * nv_ + (n_ + i)] = 1;
            beta_[i] = s * r[i];
            unbounded_hi_[n_ + i] = true;
            basis_[i] = n_ + i;
            in_basis_[n_ + i] = true;
            row_of_[n_ + i] = i;
        }
    }

    LpSolution run() {
        LpSolution out;
        // Phase 1: maximize minus the artificial sum.
        Vec c1(nv_, Rat(0));
        for (int k = 0; k < m_; ++k) c1[n_ + k] = -1;
        reset_costs(c1);
        iterate();
        Rat art_sum = 0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_) art_sum += beta_[i];
        for (int j = n_; j < nv_; ++j)
            if (!in_basis_[j] && at_upper_[j]) art_sum += hi_[j];
        if (art_sum != 0) {
            out.status = SolveStatus::Infeasible;
            out.pivots = pivots_;
            return out;
        }
        // Phase 2: pin artificials to [0,0] (basic ones sit at value 0) and
        // switch to the real objective.
        for (int j = n_; j < nv_; ++j) {
            unbounded_hi_[j] = false;
            hi_[j] = 0;
        }
        Vec c2(nv_, Rat(0));
        for (int j = 0; j < n_; ++j) c2[j] = inst_.w[j];
        reset_costs(c2);
        iterate();
        out.status = SolveStatus::Optimal;
        out.x.assign(n_, Rat(0));
        for (int j = 0; j < n_; ++j)
            out.x[j] = in_basis_[j] ? beta_[row_of_[j]] : (at_upper_[j] ? hi_[j] : lo_[j]);
        out.objective = dot(inst_.w, out.x);
        out.pivots = pivots_;
        return out;
    }

private:
    const LpInstance& inst_;
    int m_ = 0, n_ = 0, nv_ = 0;
    std::vector<Rat> t_;  // m x nv tableau, basis-inverse times all columns
    Vec beta_;            // basic variable values, row-aligned
    Vec z_;               // reduced costs
    Vec lo_, hi_;
    std::vector<bool> unbounded_hi_, at_upper_, in_basis_;
    std::vector<int> basis_, row_of_;
    long pivots_ = 0;

    Rat& t(int i, int j) { return t_[(std::size_t)i * nv_ + j]; }

    void reset_costs(const Vec& c) {
        z_ = c;
        for (int i = 0; i < m_; ++i) {
            const Rat& cb = c[basis_[i]];
            if (cb == 0) continue;
            for (int j = 0; j < nv_; ++j)
                if (t(i, j) != 0) z_[j] -= cb * t(i, j);
        }
    }

    bool movable(int j) const { return unbounded_hi_[j] || lo_[j] != hi_[j]; }

    void iterate() {
        while (true) {
            // Bland entering rule: lowest index whose reduced cost improves.
            int enter = -1, dir = 0;
            for (int j = 0; j < nv_; ++j) {
                if (in_basis_[j] || !movable(j)) continue;
                if (!at_upper_[j] && z_[j] > 0) { enter = j; dir = 1; break; }
                if (at_upper_[j] && z_[j] < 0) { enter = j; dir = -1; break; }
            }
            if (enter < 0) return;
            step(enter, dir);
            if (++pivots_ > 2000000)
                throw internal_error("simplex: pivot limit exceeded");
        }
    }

    void step(int enter, int dir) {
        // Ratio test: the entering variable moves by t >= 0 toward its other
        // bound; each basic variable caps t at whichever bound it approaches.
        bool own_cap = !unbounded_hi_[enter];
        Rat best = own_cap ? Rat(hi_[enter] - lo_[enter]) : Rat(0);
        std::vector<int> block_rows;
        for (int i = 0; i < m_; ++i) {
            Rat g = Rat(dir) * t(i, enter);
            if (g == 0) continue;
            Rat cap;
            if (g > 0)
                cap = (beta_[i] - lo_[basis_[i]]) / g;
            else if (!unbounded_hi_[basis_[i]])
                cap = (hi_[basis_[i]] - beta_[i]) / -g;
            else
                continue;
            if (!own_cap && block_rows.empty()) {
                best = cap;
                block_rows.push_back(i);
            } else if (cap < best) {
                best = cap;
                block_rows.assign(1, i);
            } else if (cap == best) {
                block_rows.push_back(i);
            }
        }
        if (!own_cap && block_rows.empty())
            throw internal_error("simplex: unbounded ray");
        // Bland leaving rule: smallest variable index among the blockers; the
        // entering variable itself competes when its own span is the cap.
        int leave_row = -1, leave_var = own_cap && block_rows.empty() ? enter : -1;
        if (own_cap && !block_rows.empty()) {
            bool own_ties = false;
            Rat own = hi_[enter] - lo_[enter];
            if (own < best) {
                best = own;
                block_rows.clear();
                leave_var = enter;
            } else if (own == best) {
                own_ties = true;
            }
            for (int i : block_rows) {
                Rat g = Rat(dir) * t(i, enter);
                Rat cap = g > 0 ? Rat((beta_[i] - lo_[basis_[i]]) / g)
                                : Rat((hi_[basis_[i]] - beta_[i]) / -g);
                if (cap != best) continue;
                if (leave_var < 0 || basis_[i] < leave_var) {
                    leave_var = basis_[i];
                    leave_row = i;
                }
            }
            if (own_ties && (leave_var < 0 || enter < leave_var)) {
                leave_var = enter;
                leave_row = -1;
            }
        } else if (!block_rows.empty()) {
            for (int i : block_rows)
                if (leave_var < 0 || basis_[i] < leave_var) {
                    leave_var = basis_[i];
                    leave_row = i;
                }
        }
        const Rat& tstep = best;
        if (leave_var == enter) {
            // Bound flip: no basis change.
            for (int i = 0; i < m_; ++i)
                if (t(i, enter) != 0) beta_[i] -= Rat(dir) * tstep * t(i, enter);
            at_upper_[enter] = !at_upper_[enter];
            return;
        }
        int r = leave_row;
        Rat enter_val = (at_upper_[enter] ? hi_[enter] : lo_[enter]) + Rat(dir) * tstep;
        Rat g = Rat(dir) * t(r, enter);
        for (int i = 0; i < m_; ++i)
            if (t(i, enter) != 0) beta_[i] -= Rat(dir) * tstep * t(i, enter);
        int out_var = basis_[r];
        in_basis_[out_var] = false;
        row_of_[out_var] = -1;
        at_upper_[out_var] = g < 0;
        if (out_var >= n_) {
            // Artificial leaves at 0; freeze it out of the problem.
            unbounded_hi_[out_var] = false;
            hi_[out_var] = 0;
            at_upper_[out_var] = false;
        }
        basis_[r] = enter;
        in_basis_[enter] = true;
        row_of_[enter] = r;
        beta_[r] = enter_val;
        Rat piv = t(r, enter);
        for (int j = 0; j < nv_; ++j) t(r, j) /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r || t(i, enter) == 0) continue;
            Rat f = t(i, enter);
            for (int j = 0; j < nv_; ++j)
                if (t(r, j) != 0) t(i, j) -= f * t(r, j);
        }
        Rat zf = z_[enter];
        if (zf != 0)
            for (int j = 0; j < nv_; ++j)
                if (t(r, j) != 0) z_[j] -= zf * t(r, j);
    }
};

}  // namespace detail

inline LpSolution solve_lp(const LpInstance& inst) {
    validate_instance(inst);
    detail::Simplex s(inst);
    return s.run();
}

}  // namespace monowalk

#endif
