#pragma once

// Brute-force LP oracle for small instances: enumerates every candidate
// vertex (choose k active rows and n-k variables pinned to a bound, solve the
// resulting square system) and takes the best feasible one. With all bounds
// finite the feasible set is a polytope, so optima live at vertices and
// unboundedness cannot occur. Independent of the simplex implementation.

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "taxlab/lp.hpp"

namespace lp_oracle {

struct OracleResult {
    bool feasible = false;
    double objective = 0.0;
    std::vector<double> point;
};

inline bool feasible_point(const taxlab::LinearProgram& lp, const std::vector<double>& x,
                           double tol) {
    return taxlab::max_violation(lp, x) <= tol;
}

namespace detail {

// Solve the k x k dense system via Gaussian elimination with partial pivoting.
inline bool dense_solve(std::vector<std::vector<double>>& a, std::vector<double>& b) {
    int k = static_cast<int>(b.size());
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-11) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < k; ++r) {
            double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    for (int col = k - 1; col >= 0; --col) {
        double s = b[col];
        for (int c = col + 1; c < k; ++c) s -= a[col][c] * b[c];
        b[col] = s / a[col][col];
    }
    return true;
}

inline void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        fn(idx);
        return;
    }
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace detail

// Requires finite bounds on every variable.
inline OracleResult solve_by_enumeration(const taxlab::LinearProgram& lp, double tol = 1e-7) {
    const int n = lp.num_vars;
    const int m = lp.num_rows();
    OracleResult best;

    // dense copy of the rows
    std::vector<std::vector<double>> rows(m, std::vector<double>(n, 0.0));
    for (int r = 0; r < m; ++r)
        for (int k = lp.row_start[r]; k < lp.row_start[r + 1]; ++k)
            rows[r][lp.col_index[k]] += lp.coef[k];

    std::vector<int> var_ids(n);
    for (int j = 0; j < n; ++j) var_ids[j] = j;

    for (int k = 0; k <= std::min(n, m); ++k) {
        detail::combinations(m, k, [&](const std::vector<int>& active_rows) {
            // choose n-k variables to pin at a bound
            detail::combinations(n, n - k, [&](const std::vector<int>& pinned) {
                std::vector<int> free_vars;
                std::vector<char> is_pinned(n, 0);
                for (int p : pinned) is_pinned[p] = 1;
                for (int j = 0; j < n; ++j)
                    if (!is_pinned[j]) free_vars.push_back(j);

                int np = static_cast<int>(pinned.size());
                // each pinned var tries both bounds
                for (int mask = 0; mask < (1 << np); ++mask) {
                    std::vector<double> x(n, 0.0);
                    for (int i = 0; i < np; ++i)
                        x[pinned[i]] = (mask >> i & 1) ? lp.upper[pinned[i]] : lp.lower[pinned[i]];

                    if (k > 0) {
                        std::vector<std::vector<double>> a(k, std::vector<double>(k));
                        std::vector<double> b(k);
                        for (int r = 0; r < k; ++r) {
                            double rhs = lp.rhs[active_rows[r]];
                            for (int i = 0; i < np; ++i)
                                rhs -= rows[active_rows[r]][pinned[i]] * x[pinned[i]];
                            b[r] = rhs;
                            for (int c = 0; c < k; ++c) a[r][c] = rows[active_rows[r]][free_vars[c]];
                        }
                        if (!detail::dense_solve(a, b)) continue;
                        for (int c = 0; c < k; ++c) x[free_vars[c]] = b[c];
                    }

                    if (!feasible_point(lp, x, tol)) continue;
                    double obj = 0.0;
                    for (int j = 0; j < n; ++j) obj += lp.cost[j] * x[j];
                    if (!best.feasible || obj < best.objective) {
                        best.feasible = true;
                        best.objective = obj;
                        best.point = x;
                    }
                }
            });
        });
    }
    return best;
}

} // namespace lp_oracle
