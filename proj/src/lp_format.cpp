#include <cmath>
#include <ostream>

#include "taxlab/csv.hpp"
#include "taxlab/lp.hpp"

namespace taxlab {

namespace {
std::string var_name(const LinearProgram& lp, int j) {
    if (j < static_cast<int>(lp.var_names.size()) && !lp.var_names[j].empty())
        return lp.var_names[j];
    return "x" + std::to_string(j);
}

std::string row_name(const LinearProgram& lp, int r) {
    if (r < static_cast<int>(lp.row_names.size()) && !lp.row_names[r].empty())
        return lp.row_names[r];
    return "c" + std::to_string(r);
}

void write_terms(std::ostream& out, const LinearProgram& lp, int from, int to) {
    bool first = true;
    for (int k = from; k < to; ++k) {
        double v = lp.coef[k];
        if (v == 0.0) continue;
        if (first) {
            if (v < 0) out << "- ";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        double a = std::abs(v);
        if (a != 1.0) out << format_double(a) << " ";
        out << var_name(lp, lp.col_index[k]);
    }
    if (first) out << "0 " << var_name(lp, 0);
}
} // namespace

void write_lp_format(const LinearProgram& lp, std::ostream& out, const std::string& title) {
    out << "\\ " << title << "\n";
    out << "Minimize\n obj:";
    bool first = true;
    for (int j = 0; j < lp.num_vars; ++j) {
        double v = lp.cost[j];
        if (v == 0.0) continue;
        if (first) {
            out << " ";
            if (v < 0) out << "- ";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        double a = std::abs(v);
        if (a != 1.0) out << format_double(a) << " ";
        out << var_name(lp, j);
    }
    if (first) out << " 0 " << var_name(lp, 0);
    out << "\nSubject To\n";
    for (int r = 0; r < lp.num_rows(); ++r) {
        out << " " << row_name(lp, r) << ": ";
        write_terms(out, lp, lp.row_start[r], lp.row_start[r + 1]);
        switch (lp.rel[r]) {
            case Relation::LessEqual: out << " <= "; break;
            case Relation::GreaterEqual: out << " >= "; break;
            case Relation::Equal: out << " = "; break;
        }
        out << format_double(lp.rhs[r]) << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < lp.num_vars; ++j) {
        double lo = lp.lower[j], hi = lp.upper[j];
        if (!std::isfinite(lo) && !std::isfinite(hi)) {
            out << " " << var_name(lp, j) << " free\n";
        } else if (lo == hi) {
            out << " " << var_name(lp, j) << " = " << format_double(lo) << "\n";
        } else {
            out << " ";
            if (std::isfinite(lo))
                out << format_double(lo) << " <= ";
            else
                out << "-inf <= ";
            out << var_name(lp, j);
            if (std::isfinite(hi)) out << " <= " << format_double(hi);
            out << "\n";
        }
    }
    out << "End\n";
}

} // namespace taxlab
