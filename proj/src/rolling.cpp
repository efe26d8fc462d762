#include "taxlab/rolling.hpp"

#include <stdexcept>
#include <string>

namespace taxlab {

RollingStats solve_rolling(const RollingProblem& problem, int horizon,
                           const std::vector<double>& init_states, const RollingOptions& opt) {
    if (horizon <= 0) throw std::invalid_argument("rolling: horizon must be positive");
    if (opt.block <= opt.overlap || opt.overlap < 0)
        throw std::invalid_argument("rolling: need block > overlap >= 0");

    RollingStats stats;
    std::vector<double> states = init_states;
    int t0 = 0;
    while (t0 < horizon) {
        int len = std::min(opt.block, horizon - t0);
        bool terminal = (t0 + len >= horizon);
        int keep = terminal ? len : opt.block - opt.overlap;

        LinearProgram lp = problem.build(t0, t0 + len, states, terminal);
        LpSolution sol = solve(lp, opt.tol);
        if (sol.status != LpStatus::Optimal) {
            const char* what = sol.status == LpStatus::Infeasible ? "infeasible" : "unbounded";
            throw BlockFailure(t0, sol.status,
                               "rolling block starting at hour " + std::to_string(t0) + " is " + what);
        }
        ++stats.blocks;
        stats.iterations += sol.iterations;

        problem.consume(sol.primal, t0, keep);
        if (!terminal) states = problem.states_at(sol.primal, keep - 1);
        t0 += keep;
    }
    return stats;
}

} // namespace taxlab
