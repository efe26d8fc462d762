#pragma once

// Seeded random small LPs (n,m <= 8, all bounds finite) shared by the unit
// and acceptance suites. Coefficients are quarter-integers so borderline
// feasibility never hinges on the last few ulps.

#include "taxlab/lp.hpp"
#include "taxlab/rng.hpp"

namespace testgen {

inline taxlab::LinearProgram random_lp(int seed) {
    taxlab::Rng rng(0xABCD0000u + static_cast<std::uint64_t>(seed));
    int n = 1 + static_cast<int>(rng.below(8));
    int m = 1 + static_cast<int>(rng.below(8));

    auto quarters = [&](double lo, double hi) {
        double v = rng.uniform(lo, hi);
        return std::round(v * 4.0) / 4.0;
    };

    taxlab::LinearProgram lp;
    for (int j = 0; j < n; ++j) {
        double lo = quarters(-4.0, 1.0);
        double hi = lo + std::max(0.25, quarters(0.0, 6.0));
        lp.add_variable(lo, hi, quarters(-3.0, 3.0));
    }
    for (int r = 0; r < m; ++r) {
        std::vector<std::pair<int, double>> entries;
        for (int j = 0; j < n; ++j) {
            if (rng.uniform() < 0.65) {
                double v = quarters(-3.0, 3.0);
                if (v != 0.0) entries.push_back({j, v});
            }
        }
        if (entries.empty()) entries.push_back({static_cast<int>(rng.below(n)), 1.0});
        double roll = rng.uniform();
        taxlab::Relation rel = roll < 0.4   ? taxlab::Relation::LessEqual
                               : roll < 0.8 ? taxlab::Relation::GreaterEqual
                                            : taxlab::Relation::Equal;
        lp.add_row(entries, rel, quarters(-5.0, 5.0));
    }
    return lp;
}

} // namespace testgen
