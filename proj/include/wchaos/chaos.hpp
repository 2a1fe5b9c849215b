#pragma once

#include <map>
#include <vector>

#include "wchaos/symtensor.hpp"

namespace wchaos {

struct OrderCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite Wiener-Ito expansion F = constant + sum_q I_q(f_q).
class ChaosExpansion {
  public:
    explicit ChaosExpansion(int dim, double constant = 0.0)
        : dim_(dim), constant_(constant) {
        if (dim < 1) throw ShapeError("ChaosExpansion: bad dim");
    }

    static ChaosExpansion integral(const SymTensor& kernel) {
        ChaosExpansion f(kernel.dim());
        f.add_kernel(kernel);
        return f;
    }

    int dim() const { return dim_; }
    double constant() const { return constant_; }
    void set_constant(double c) { constant_ = c; }

    int max_order() const { return kernels_.empty() ? 0 : kernels_.rbegin()->first; }
    const std::map<int, SymTensor>& kernels() const { return kernels_; }

    // Accumulates a kernel (or a scalar for order 0) into the expansion.
    void add_kernel(const SymTensor& k, double coeff = 1.0);

    bool has_kernel(int q) const { return kernels_.count(q) > 0; }
    const SymTensor& kernel(int q) const { return kernels_.at(q); }

    // Drops kernels whose coefficients are all exactly zero.
    void prune();

  private:
    int dim_;
    double constant_;
    std::map<int, SymTensor> kernels_;  // order >= 1 only
};

inline constexpr int kDefaultOrderCap = 64;

ChaosExpansion multiply(const ChaosExpansion& F, const ChaosExpansion& G,
                        int order_cap = kDefaultOrderCap);
double expectation(const ChaosExpansion& F);

// Chaos expansion of <DF, -D L^{-1} G>.
ChaosExpansion gamma_pair(const ChaosExpansion& F, const ChaosExpansion& G);
// Gamma_j recursion: Gamma_0 = F, Gamma_{j+1} = gamma_pair(F, Gamma_j).
ChaosExpansion gamma(const ChaosExpansion& F, int j);
// kappa_s(F) = (s-1)! E[Gamma_{s-1}(F)].
double cumulant_via_gamma(const ChaosExpansion& F, int s);

using MomentSequence = std::vector<double>;    // E[X^k], k = 1..m
using CumulantSequence = std::vector<double>;  // kappa_k, k = 1..m

MomentSequence moments(const ChaosExpansion& F, int m, int order_cap = kDefaultOrderCap);
CumulantSequence moments_to_cumulants(const MomentSequence& mu);
MomentSequence cumulants_to_moments(const CumulantSequence& kappa);

}  // namespace wchaos
