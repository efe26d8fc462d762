#include "taxlab/lp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <vector>

namespace taxlab {

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
    double worst = 0.0;
    for (int j = 0; j < lp.num_vars; ++j) {
        if (std::isfinite(lp.lower[j])) worst = std::max(worst, lp.lower[j] - x[j]);
        if (std::isfinite(lp.upper[j])) worst = std::max(worst, x[j] - lp.upper[j]);
    }
    for (int r = 0; r < lp.num_rows(); ++r) {
        double act = 0.0;
        for (int k = lp.row_start[r]; k < lp.row_start[r + 1]; ++k)
            act += lp.coef[k] * x[lp.col_index[k]];
        switch (lp.rel[r]) {
            case Relation::LessEqual: worst = std::max(worst, act - lp.rhs[r]); break;
            case Relation::GreaterEqual: worst = std::max(worst, lp.rhs[r] - act); break;
            case Relation::Equal: worst = std::max(worst, std::abs(act - lp.rhs[r])); break;
        }
    }
    return worst;
}

namespace {

// ---------------------------------------------------------------------------
// Sparse LU of the basis (Gilbert-Peierls, partial pivoting) plus a
// product-form eta file between refactorizations.
// ---------------------------------------------------------------------------

struct SparseCol {
    std::vector<int> idx;
    std::vector<double> val;
    void clear() { idx.clear(); val.clear(); }
    void push(int i, double v) { idx.push_back(i); val.push_back(v); }
    size_t size() const { return idx.size(); }
};

struct Eta {
    int pivot_pos;
    double pivot_val;
    std::vector<int> idx;  // positions other than pivot_pos
    std::vector<double> val;
};

class BasisFactor {
public:
    template <typename ColFn>
    bool factor(int m, ColFn col_of) {
        m_ = m;
        lcols_.assign(m, {});
        ucols_.assign(m, {});
        udiag_.assign(m, 0.0);
        pivot_row_.assign(m, -1);
        row_pos_.assign(m, -1);
        mark_.assign(m, 0);
        etas_.clear();
        eta_entries_ = 0;
        lu_entries_ = 0;

        std::vector<double> work(m, 0.0);
        std::vector<int> pattern, stack, stack_k;
        SparseCol bcol;

        for (int j = 0; j < m; ++j) {
            bcol.clear();
            col_of(j, bcol);

            // symbolic: reach of bcol's pattern through finished L columns
            pattern.clear();
            for (int start : bcol.idx) {
                if (mark_[start]) continue;
                stack.assign(1, start);
                stack_k.assign(1, 0);
                mark_[start] = 1;
                while (!stack.empty()) {
                    int node = stack.back();
                    int t = row_pos_[node];
                    bool descended = false;
                    if (t >= 0) {
                        auto& lc = lcols_[t];
                        for (int& k = stack_k.back(); k < static_cast<int>(lc.size());) {
                            int child = lc.idx[k++];
                            if (!mark_[child]) {
                                mark_[child] = 1;
                                stack.push_back(child);
                                stack_k.push_back(0);
                                descended = true;
                                break;
                            }
                        }
                    }
                    if (!descended) {
                        pattern.push_back(node);
                        stack.pop_back();
                        stack_k.pop_back();
                    }
                }
            }
            for (int i : pattern) mark_[i] = 0;

            // numeric: L w = bcol, processed in reverse postorder
            for (size_t k = 0; k < bcol.size(); ++k) work[bcol.idx[k]] = bcol.val[k];
            for (auto it = pattern.rbegin(); it != pattern.rend(); ++it) {
                int node = *it;
                int t = row_pos_[node];
                if (t < 0) continue;
                double xv = work[node];
                if (xv == 0.0) continue;
                auto& lc = lcols_[t];
                for (size_t k = 0; k < lc.size(); ++k) work[lc.idx[k]] -= lc.val[k] * xv;
            }

            int prow = -1;
            double pmax = 0.0;
            for (int node : pattern) {
                if (row_pos_[node] >= 0) continue;
                double a = std::abs(work[node]);
                if (a > pmax) {
                    pmax = a;
                    prow = node;
                }
            }
            if (prow < 0 || pmax < 1e-12) {
                for (int node : pattern) work[node] = 0.0;
                return false;  // singular
            }

            double piv = work[prow];
            for (int node : pattern) {
                double v = work[node];
                work[node] = 0.0;
                if (v == 0.0 || node == prow) continue;
                int t = row_pos_[node];
                if (t >= 0)
                    ucols_[j].push(t, v);
                else
                    lcols_[j].push(node, v / piv);
            }
            udiag_[j] = piv;
            pivot_row_[j] = prow;
            row_pos_[prow] = j;
            lu_entries_ += lcols_[j].size() + ucols_[j].size() + 1;
        }
        return true;
    }

    // x (dense, original row index) -> B^{-1} x (basis positions).
    // x is zeroed on exit so callers can reuse the buffer.
    void ftran(std::vector<double>& x, std::vector<double>& pos_out) const {
        for (int t = 0; t < m_; ++t) {
            double v = x[pivot_row_[t]];
            pos_out[t] = v;
            if (v == 0.0) continue;
            auto& lc = lcols_[t];
            for (size_t k = 0; k < lc.size(); ++k) x[lc.idx[k]] -= lc.val[k] * v;
        }
        std::fill(x.begin(), x.end(), 0.0);
        for (int j = m_ - 1; j >= 0; --j) {
            double xj = pos_out[j] / udiag_[j];
            pos_out[j] = xj;
            if (xj == 0.0) continue;
            auto& uc = ucols_[j];
            for (size_t k = 0; k < uc.size(); ++k) pos_out[uc.idx[k]] -= uc.val[k] * xj;
        }
        for (const Eta& e : etas_) {
            double t = pos_out[e.pivot_pos] / e.pivot_val;
            if (t != 0.0)
                for (size_t k = 0; k < e.idx.size(); ++k) pos_out[e.idx[k]] -= e.val[k] * t;
            pos_out[e.pivot_pos] = t;
        }
    }

    // c (dense, basis positions; consumed) -> pi with B^T pi = c (row index).
    void btran(std::vector<double>& c, std::vector<double>& row_out) const {
        for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
            const Eta& e = *it;
            double s = c[e.pivot_pos];
            for (size_t k = 0; k < e.idx.size(); ++k) s -= e.val[k] * c[e.idx[k]];
            c[e.pivot_pos] = s / e.pivot_val;
        }
        for (int j = 0; j < m_; ++j) {
            double s = c[j];
            auto& uc = ucols_[j];
            for (size_t k = 0; k < uc.size(); ++k) s -= uc.val[k] * c[uc.idx[k]];
            c[j] = s / udiag_[j];
        }
        for (int t = m_ - 1; t >= 0; --t) {
            double s = c[t];
            auto& lc = lcols_[t];
            for (size_t k = 0; k < lc.size(); ++k) s -= lc.val[k] * c[row_pos_[lc.idx[k]]];
            c[t] = s;
        }
        for (int t = 0; t < m_; ++t) row_out[pivot_row_[t]] = c[t];
    }

    bool update(const std::vector<double>& w, int r) {
        double pv = w[r];
        if (std::abs(pv) < 1e-10) return false;
        Eta e;
        e.pivot_pos = r;
        e.pivot_val = pv;
        for (int t = 0; t < m_; ++t) {
            if (t != r && w[t] != 0.0) {
                e.idx.push_back(t);
                e.val.push_back(w[t]);
            }
        }
        eta_entries_ += e.idx.size() + 1;
        etas_.push_back(std::move(e));
        return true;
    }

    bool etas_heavy() const { return eta_entries_ > 2 * lu_entries_ + 4096; }

private:
    int m_ = 0;
    std::vector<SparseCol> lcols_, ucols_;
    std::vector<double> udiag_;
    std::vector<int> pivot_row_;  // pivot_row_[t] = original row chosen at step t
    std::vector<int> row_pos_;    // inverse permutation
    std::vector<Eta> etas_;
    size_t lu_entries_ = 0;
    size_t eta_entries_ = 0;
    std::vector<char> mark_;
};

// ---------------------------------------------------------------------------
// Revised simplex on bounded variables, two phases, deterministic pivoting.
// ---------------------------------------------------------------------------

enum class VarState : char { AtLower, AtUpper, Basic, FreeZero };

class Simplex {
public:
    Simplex(const LinearProgram& lp, const ToleranceSet& tol) : lp_(lp), tol_(tol) {
        n_ = lp.num_vars;
        m_ = lp.num_rows();
        total_ = n_ + m_;
        build_matrix();
        build_bounds();
        cost_scale_ = 1.0;
        for (double c : lp_.cost) cost_scale_ = std::max(cost_scale_, std::abs(c));
    }

    LpSolution run() {
        iter_cap_ = static_cast<long>(tol_.iteration_factor * (n_ + m_)) + 100;
        init_basis();

        LpSolution sol;
        sol.status = LpStatus::Optimal;
        for (int round = 0; round < 6; ++round) {
            long before = iterations_;
            if (!drive(true)) {
                sol.status = LpStatus::Infeasible;
                sol.iterations = iterations_;
                return sol;
            }
            if (!drive(false)) {
                sol.status = LpStatus::Unbounded;
                sol.iterations = iterations_;
                return sol;
            }
            refactor();
            if (iterations_ == before || max_basic_violation() <= tol_.feasibility) break;
        }

        sol.primal.assign(x_.begin(), x_.begin() + n_);
        double obj = 0.0;
        for (int j = 0; j < n_; ++j) obj += lp_.cost[j] * sol.primal[j];
        sol.objective = obj;
        sol.iterations = iterations_;
        sol.max_constraint_violation = max_violation(lp_, sol.primal);
        return sol;
    }

private:
    void build_matrix() {
        std::vector<int> count(n_, 0);
        for (int c : lp_.col_index) ++count[c];
        col_start_.assign(n_ + 1, 0);
        for (int j = 0; j < n_; ++j) col_start_[j + 1] = col_start_[j] + count[j];
        row_idx_.resize(lp_.col_index.size());
        val_.resize(lp_.col_index.size());
        std::vector<int> fill(col_start_.begin(), col_start_.end() - 1);
        for (int r = 0; r < m_; ++r) {
            for (int k = lp_.row_start[r]; k < lp_.row_start[r + 1]; ++k) {
                int j = lp_.col_index[k];
                row_idx_[fill[j]] = r;
                val_[fill[j]] = lp_.coef[k];
                ++fill[j];
            }
        }
    }

    void build_bounds() {
        lo_.resize(total_);
        up_.resize(total_);
        for (int j = 0; j < n_; ++j) {
            lo_[j] = lp_.lower[j];
            up_[j] = lp_.upper[j];
        }
        for (int i = 0; i < m_; ++i) {
            switch (lp_.rel[i]) {
                case Relation::LessEqual:
                    lo_[n_ + i] = -kInf;
                    up_[n_ + i] = lp_.rhs[i];
                    break;
                case Relation::GreaterEqual:
                    lo_[n_ + i] = lp_.rhs[i];
                    up_[n_ + i] = kInf;
                    break;
                case Relation::Equal:
                    lo_[n_ + i] = lp_.rhs[i];
                    up_[n_ + i] = lp_.rhs[i];
                    break;
            }
        }
    }

    double nonbasic_value(int j) const {
        switch (state_[j]) {
            case VarState::AtLower: return lo_[j];
            case VarState::AtUpper: return up_[j];
            default: return 0.0;
        }
    }

    void init_basis() {
        state_.assign(total_, VarState::AtLower);
        x_.assign(total_, 0.0);
        basic_.resize(m_);
        for (int j = 0; j < n_; ++j) {
            if (std::isfinite(lo_[j]) && std::isfinite(up_[j]))
                state_[j] = (std::abs(lo_[j]) <= std::abs(up_[j])) ? VarState::AtLower : VarState::AtUpper;
            else if (std::isfinite(lo_[j]))
                state_[j] = VarState::AtLower;
            else if (std::isfinite(up_[j]))
                state_[j] = VarState::AtUpper;
            else
                state_[j] = VarState::FreeZero;
            x_[j] = nonbasic_value(j);
        }
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            state_[n_ + i] = VarState::Basic;
        }
        refactor();
    }

    void column_of(int col, SparseCol& out) const {
        if (col < n_) {
            for (int k = col_start_[col]; k < col_start_[col + 1]; ++k)
                out.push(row_idx_[k], val_[k]);
        } else {
            out.push(col - n_, -1.0);
        }
    }

    void refactor() {
        bool ok = factor_.factor(m_, [this](int t, SparseCol& out) { column_of(basic_[t], out); });
        if (!ok) {
            restart_logical_basis();
            ok = factor_.factor(m_, [this](int t, SparseCol& out) { column_of(basic_[t], out); });
            if (!ok) throw std::runtime_error("lp solver: singular basis after repair");
        }
        recompute_basic_values();
    }

    // Numerically singular basis: restart from the all-logical basis.
    void restart_logical_basis() {
        for (int t = 0; t < m_; ++t) {
            int j = basic_[t];
            if (j >= n_) continue;
            state_[j] = std::isfinite(lo_[j]) ? VarState::AtLower
                       : std::isfinite(up_[j]) ? VarState::AtUpper
                                               : VarState::FreeZero;
            x_[j] = nonbasic_value(j);
        }
        for (int i = 0; i < m_; ++i) {
            basic_[i] = n_ + i;
            state_[n_ + i] = VarState::Basic;
        }
    }

    void recompute_basic_values() {
        std::vector<double> rhs(m_, 0.0), pos(m_, 0.0);
        for (int j = 0; j < total_; ++j) {
            if (state_[j] == VarState::Basic) continue;
            double v = x_[j];
            if (v == 0.0) continue;
            if (j < n_) {
                for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
                    rhs[row_idx_[k]] -= val_[k] * v;
            } else {
                rhs[j - n_] += v;
            }
        }
        factor_.ftran(rhs, pos);
        for (int t = 0; t < m_; ++t) x_[basic_[t]] = pos[t];
    }

    double max_basic_violation() const {
        double worst = 0.0;
        for (int t = 0; t < m_; ++t) {
            int j = basic_[t];
            worst = std::max(worst, lo_[j] - x_[j]);
            worst = std::max(worst, x_[j] - up_[j]);
        }
        return worst;
    }

    bool drive(bool phase1) {
        std::vector<double> cb(m_), pi(m_, 0.0), rhs(m_, 0.0), wpos(m_, 0.0);
        long degenerate_run = 0;
        bool bland = false;
        bool just_cleaned = false;
        int since_refactor = 0;
        const double feas = tol_.feasibility;

        for (;;) {
            if (iterations_ >= iter_cap_)
                throw IterationLimitError("lp solver: iteration limit " + std::to_string(iter_cap_) +
                                          " reached (" + std::to_string(n_) + " vars, " +
                                          std::to_string(m_) + " rows)");

            if (phase1 && max_basic_violation() <= feas) return true;

            // phase cost on basic variables
            bool any_cost = false;
            for (int t = 0; t < m_; ++t) {
                int j = basic_[t];
                double c;
                if (phase1) {
                    c = (x_[j] < lo_[j] - feas) ? -1.0 : (x_[j] > up_[j] + feas) ? 1.0 : 0.0;
                } else {
                    c = (j < n_) ? lp_.cost[j] : 0.0;
                }
                cb[t] = c;
                any_cost = any_cost || (c != 0.0);
            }
            if (phase1 && !any_cost) return true;

            if (any_cost) {
                factor_.btran(cb, pi);
            } else {
                std::fill(pi.begin(), pi.end(), 0.0);
            }

            const double dtol = tol_.optimality * (phase1 ? 1.0 : std::max(1.0, cost_scale_));

            int enter = -1;
            double enter_d = 0.0, best = dtol;
            for (int j = 0; j < total_; ++j) {
                if (state_[j] == VarState::Basic || lo_[j] == up_[j]) continue;
                double d = phase1 ? 0.0 : (j < n_ ? lp_.cost[j] : 0.0);
                if (j < n_) {
                    for (int k = col_start_[j]; k < col_start_[j + 1]; ++k)
                        d -= pi[row_idx_[k]] * val_[k];
                } else {
                    d += pi[j - n_];
                }
                bool elig;
                switch (state_[j]) {
                    case VarState::AtLower: elig = d < -dtol; break;
                    case VarState::AtUpper: elig = d > dtol; break;
                    default: elig = std::abs(d) > dtol; break;
                }
                if (!elig) continue;
                if (bland) {
                    enter = j;
                    enter_d = d;
                    break;
                }
                if (std::abs(d) > best) {
                    best = std::abs(d);
                    enter = j;
                    enter_d = d;
                }
            }

            if (enter < 0) {
                // claimed termination: verify on a fresh factorization once
                if (!just_cleaned) {
                    refactor();
                    just_cleaned = true;
                    continue;
                }
                if (phase1) return max_basic_violation() <= feas * 10;
                return true;
            }
            just_cleaned = false;

            const int dir = (state_[enter] == VarState::AtUpper) ? -1 : (enter_d < 0 ? +1 : -1);

            SparseCol ecol;
            column_of(enter, ecol);
            for (size_t k = 0; k < ecol.size(); ++k) rhs[ecol.idx[k]] = ecol.val[k];
            factor_.ftran(rhs, wpos);

            double own_cap = kInf;
            if (std::isfinite(lo_[enter]) && std::isfinite(up_[enter]))
                own_cap = up_[enter] - lo_[enter];

            // Harris pass 1: relaxed max step
            double tmax = own_cap;
            for (int t = 0; t < m_; ++t) {
                double w = wpos[t] * dir;
                if (std::abs(w) < tol_.pivot_floor) continue;
                int j = basic_[t];
                double target;
                if (w > 0) {  // basic decreases
                    if (phase1 && x_[j] < lo_[j] - feas) continue;
                    target = (phase1 && x_[j] > up_[j] + feas) ? up_[j] : lo_[j];
                } else {  // basic increases
                    if (phase1 && x_[j] > up_[j] + feas) continue;
                    target = (phase1 && x_[j] < lo_[j] - feas) ? lo_[j] : up_[j];
                }
                if (!std::isfinite(target)) continue;
                double lim = ((x_[j] - target) * (w > 0 ? 1.0 : -1.0) + feas) / std::abs(w);
                tmax = std::min(tmax, lim);
            }

            if (!std::isfinite(tmax)) {
                std::fill(wpos.begin(), wpos.end(), 0.0);
                if (phase1) throw std::runtime_error("lp solver: unbounded phase-1 ray");
                return false;  // unbounded
            }

            // Harris pass 2: largest pivot among blockers within tmax
            int leave_pos = -1;
            double step = tmax, leave_pivot = 0.0;
            bool leave_to_upper = false;
            for (int t = 0; t < m_; ++t) {
                double w = wpos[t] * dir;
                if (std::abs(w) < tol_.pivot_floor) continue;
                int j = basic_[t];
                double target;
                bool to_upper;
                if (w > 0) {
                    if (phase1 && x_[j] < lo_[j] - feas) continue;
                    bool cross = phase1 && x_[j] > up_[j] + feas;
                    target = cross ? up_[j] : lo_[j];
                    to_upper = cross;
                } else {
                    if (phase1 && x_[j] > up_[j] + feas) continue;
                    bool cross = phase1 && x_[j] < lo_[j] - feas;
                    target = cross ? lo_[j] : up_[j];
                    to_upper = !cross;
                }
                if (!std::isfinite(target)) continue;
                double ratio = (x_[j] - target) / w;
                if (ratio <= tmax) {
                    bool better = leave_pos < 0 || std::abs(wpos[t]) > std::abs(leave_pivot) ||
                                  (std::abs(wpos[t]) == std::abs(leave_pivot) && j < basic_[leave_pos]);
                    if (better) {
                        leave_pos = t;
                        leave_pivot = wpos[t];
                        step = ratio;
                        leave_to_upper = to_upper;
                    }
                }
            }

            if (leave_pos < 0) {
                // entering variable flips to its other bound
                step = own_cap;
                if (!std::isfinite(step)) {
                    std::fill(wpos.begin(), wpos.end(), 0.0);
                    if (phase1) throw std::runtime_error("lp solver: unbounded phase-1 ray");
                    return false;
                }
                apply_step(dir, step, wpos, enter);
                state_[enter] = (dir > 0) ? VarState::AtUpper : VarState::AtLower;
                x_[enter] = nonbasic_value(enter);
                std::fill(wpos.begin(), wpos.end(), 0.0);
                ++iterations_;
                continue;
            }

            if (step < 0) step = 0;
            if (step <= 1e-12) {
                if (++degenerate_run > 400) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }

            apply_step(dir, step, wpos, enter);

            int leaver = basic_[leave_pos];
            state_[leaver] = (lo_[leaver] == up_[leaver]) ? VarState::AtLower
                            : leave_to_upper              ? VarState::AtUpper
                                                          : VarState::AtLower;
            x_[leaver] = nonbasic_value(leaver);
            basic_[leave_pos] = enter;
            state_[enter] = VarState::Basic;

            ++iterations_;
            ++since_refactor;
            bool updated = factor_.update(wpos, leave_pos);
            std::fill(wpos.begin(), wpos.end(), 0.0);
            if (!updated || since_refactor >= 64 || factor_.etas_heavy()) {
                refactor();
                since_refactor = 0;
            }
        }
    }

    void apply_step(int dir, double step, const std::vector<double>& wpos, int enter) {
        if (step == 0.0) return;
        for (int t = 0; t < m_; ++t)
            if (wpos[t] != 0.0) x_[basic_[t]] -= dir * step * wpos[t];
        x_[enter] += dir * step;
    }

    const LinearProgram& lp_;
    ToleranceSet tol_;
    int n_ = 0, m_ = 0, total_ = 0;

    std::vector<int> col_start_, row_idx_;
    std::vector<double> val_;
    std::vector<double> lo_, up_;

    std::vector<VarState> state_;
    std::vector<double> x_;
    std::vector<int> basic_;
    BasisFactor factor_;
    long iterations_ = 0;
    long iter_cap_ = 0;
    double cost_scale_ = 1.0;
};

} // namespace

LpSolution solve(const LinearProgram& lp, const ToleranceSet& tol) {
    lp.validate();
    Simplex s(lp, tol);
    return s.run();
}

} // namespace taxlab
