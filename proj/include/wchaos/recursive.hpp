#pragma once

#include <vector>

#include "wchaos/chaos.hpp"
#include "wchaos/combinatorics.hpp"
#include "wchaos/symtensor.hpp"

namespace wchaos {

/// Admissible contraction-order tuple (r_1,...,r_{s-2}) for kappa_s(I_q(f)):
///   (i)   1 <= r_i <= q
///   (ii)  sum r_i = (s-2)q/2
///   (iii) r_1 + ... + r_k < (k+1)q/2 for k = 1..s-3
///   (iv)  r_k <= kq - 2(r_1 + ... + r_{k-1}) for k = 2..s-2
struct RVector {
    int q = 0;
    int s = 0;
    std::vector<int> rs;
};

std::vector<RVector> enumerate_rvectors(int q, int s);

// Combinatorial constant c_q(r_1,...,r_a), exact.
BigInt cq(int q, const std::vector<int>& rs);

// kappa_s(I_q(f)) by the recursive contraction formula.
double kappa_recursive(const SymTensor& f, int s);

// Explicit chaos expansion of Gamma_{s-1}(I_q(f)).
ChaosExpansion gamma_expansion_chaos(const SymTensor& f, int s);

// kappa_4(I_q(f)) via symmetrized contraction norms only.
double kappa4_contraction_form(const SymTensor& f);
// kappa_4(I_q(f)) via mixed symmetrized / non-symmetrized contraction norms.
double kappa4_nunugio_form(const SymTensor& f);

// Test fixture: scales every c_q constant so cross-validation must fail.
void set_cq_corruption(bool on);

}  // namespace wchaos
