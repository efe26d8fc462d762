#pragma once

#include <functional>
#include <vector>

#include "taxlab/lp.hpp"

namespace taxlab {

// Rolling-horizon driver. The problem is supplied through three callbacks so
// the driver stays independent of what the block LP actually models.
struct RollingProblem {
    // Build the LP for hours [t0, t1), starting from the given storage
    // states. `terminal` marks the block containing the final hour.
    std::function<LinearProgram(int t0, int t1, const std::vector<double>& init_states,
                                bool terminal)>
        build;
    // Storage states at the END of local hour `local_h` of the last-built block.
    std::function<std::vector<double>(const std::vector<double>& primal, int local_h)> states_at;
    // Consume the first `keep` hours of the block starting at absolute hour t0.
    std::function<void(const std::vector<double>& primal, int t0, int keep)> consume;
};

struct RollingOptions {
    int block = 336;
    int overlap = 48;
    ToleranceSet tol;
};

struct BlockFailure : std::runtime_error {
    int start_hour;
    LpStatus status;
    BlockFailure(int t0, LpStatus s, const std::string& msg)
        : std::runtime_error(msg), start_hour(t0), status(s) {}
};

struct RollingStats {
    int blocks = 0;
    long iterations = 0;
};

// Solves consecutive blocks, keeps block-overlap hours of each (the terminal
// block keeps everything), and carries storage states across the seam.
// With block >= horizon the single solve is reproduced exactly.
RollingStats solve_rolling(const RollingProblem& problem, int horizon,
                           const std::vector<double>& init_states, const RollingOptions& opt);

} // namespace taxlab
