#pragma once

#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taxlab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { LessEqual, Equal, GreaterEqual };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct ToleranceSet {
    double feasibility = 1e-7;  // absolute, on bounds and row activities
    double optimality = 1e-7;   // relative, on reduced costs
    double pivot_floor = 1e-9;  // smallest acceptable ratio-test pivot
    double iteration_factor = 50.0;  // iteration cap = factor * (num_vars + num_rows)
};

// Thrown when the iteration cap is hit; never a silent wrong answer.
struct IterationLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sparse LP: minimize cost.x subject to row relations and variable bounds.
// Rows are stored CSR. Names are optional diagnostics.
struct LinearProgram {
    int num_vars = 0;
    std::vector<double> cost;
    std::vector<double> lower, upper;

    std::vector<int> row_start{0};
    std::vector<int> col_index;
    std::vector<double> coef;
    std::vector<Relation> rel;
    std::vector<double> rhs;

    std::vector<std::string> var_names;  // empty or size num_vars
    std::vector<std::string> row_names;  // empty or size num_rows

    int num_rows() const { return static_cast<int>(rhs.size()); }

    int add_variable(double lo, double hi, double c, std::string name = {}) {
        if (lo > hi) throw std::invalid_argument("variable bounds crossed");
        lower.push_back(lo);
        upper.push_back(hi);
        cost.push_back(c);
        if (!name.empty() || !var_names.empty()) {
            var_names.resize(num_vars);
            var_names.push_back(std::move(name));
        }
        return num_vars++;
    }

    int add_row(std::span<const std::pair<int, double>> entries, Relation r, double rhs_value,
                std::string name = {}) {
        for (const auto& [j, v] : entries) {
            if (j < 0 || j >= num_vars) throw std::invalid_argument("row references unknown variable");
            col_index.push_back(j);
            coef.push_back(v);
        }
        row_start.push_back(static_cast<int>(col_index.size()));
        rel.push_back(r);
        rhs.push_back(rhs_value);
        if (!name.empty() || !row_names.empty()) {
            row_names.resize(num_rows() - 1);
            row_names.push_back(std::move(name));
        }
        return num_rows() - 1;
    }

    int add_row(std::initializer_list<std::pair<int, double>> entries, Relation r, double rhs_value,
                std::string name = {}) {
        return add_row(std::span<const std::pair<int, double>>(entries.begin(), entries.size()), r,
                       rhs_value, std::move(name));
    }

    void validate() const {
        if (cost.size() != static_cast<size_t>(num_vars) || lower.size() != upper.size() ||
            lower.size() != cost.size())
            throw std::invalid_argument("inconsistent variable arrays");
        for (int j = 0; j < num_vars; ++j)
            if (lower[j] > upper[j]) throw std::invalid_argument("variable bounds crossed");
        for (int k : col_index)
            if (k < 0 || k >= num_vars) throw std::invalid_argument("column index out of range");
    }
};

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    double objective = 0.0;
    std::vector<double> primal;
    double max_constraint_violation = 0.0;
    long iterations = 0;
};

// Residual audit over the original rows and bounds; deliberately a separate
// code path from the solver's own bookkeeping.
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

LpSolution solve(const LinearProgram& lp, const ToleranceSet& tol = {});

// CPLEX-LP-format text export (objective, constraints, bounds) for debugging.
void write_lp_format(const LinearProgram& lp, std::ostream& out, const std::string& title = "lp");

} // namespace taxlab
