#pragma once

#include <cmath>
#include <vector>

#include "wchaos/recursive.hpp"

namespace wchaos {

/// One row of the fourth moment theorem demo for
/// f_n = (2n)^{-1/2} sum_i e_i (x) e_i  (q = 2, dim = n, kappa_2 = 1).
struct FmtDemoRow {
    int n = 0;
    double contraction_norm = 0.0;       // ||f_n (~x)_1 f_n||
    std::vector<double> kappa;           // kappa_s, s = 2..s_max
};

// Cumulants are evaluated on the integer kernel sum_i e_i (x) e_i and
// rescaled by (2n)^{-s/2}; kappa_s(c f) = c^s kappa_s(f) exactly, and for
// even s the scale factor is an exact dyadic rational when n is a power of
// two, so kappa_2 = 1 and kappa_4 = 12/n come out exact.
inline FmtDemoRow fmt_demo_row(int n, int s_max) {
    SymTensor g(2, n);
    for (int i = 0; i < n; ++i) g.set({i, i}, 1.0);

    FmtDemoRow row;
    row.n = n;
    // (c g) (~x)_1 (c g) = c^2 (g (~x)_1 g) with c^2 = 1/(2n)
    row.contraction_norm = norm(sym_contract(g, g, 1)) / (2.0 * n);
    for (int s = 2; s <= s_max; ++s) {
        double factor;
        if (s % 2 == 0) {
            factor = 1.0;
            for (int i = 0; i < s / 2; ++i) factor /= 2.0 * n;
        } else {
            factor = std::pow(2.0 * n, -0.5 * s);
        }
        row.kappa.push_back(kappa_recursive(g, s) * factor);
    }
    return row;
}

}  // namespace wchaos
