#include "wchaos/chaos.hpp"

#include <cmath>

#include "wchaos/combinatorics.hpp"

namespace wchaos {

void ChaosExpansion::add_kernel(const SymTensor& k, double coeff) {
    if (k.dim() != dim_) throw ShapeError("add_kernel: dim mismatch");
    if (k.order() == 0) {
        constant_ += coeff * k[0];
        return;
    }
    auto it = kernels_.find(k.order());
    if (it == kernels_.end())
        kernels_.emplace(k.order(), scale(k, coeff));
    else
        add_scaled_inplace(it->second, k, coeff);
}

void ChaosExpansion::prune() {
    for (auto it = kernels_.begin(); it != kernels_.end();) {
        bool zero = true;
        for (std::size_t i = 0; i < it->second.size() && zero; ++i)
            if (it->second[i] != 0.0) zero = false;
        it = zero ? kernels_.erase(it) : std::next(it);
    }
}

namespace {

// Kernels of F including the constant as an order-0 tensor.
std::vector<SymTensor> kernels_with_constant(const ChaosExpansion& F) {
    std::vector<SymTensor> out;
    if (F.constant() != 0.0) out.push_back(SymTensor::scalar(F.dim(), F.constant()));
    for (const auto& [q, f] : F.kernels()) out.push_back(f);
    return out;
}

}  // namespace

ChaosExpansion multiply(const ChaosExpansion& F, const ChaosExpansion& G, int order_cap) {
    if (F.dim() != G.dim()) throw ShapeError("multiply: dim mismatch");
    ChaosExpansion out(F.dim());
    for (const auto& f : kernels_with_constant(F)) {
        for (const auto& g : kernels_with_constant(G)) {
            const int p = f.order(), q = g.order();
            if (p + q > order_cap)
                throw OrderCapError("multiply: product order " + std::to_string(p + q) +
                                    " exceeds cap " + std::to_string(order_cap));
            for (int r = 0; r <= std::min(p, q); ++r) {
                const double coeff =
                    to_double(factorial(r) * binomial(p, r) * binomial(q, r));
                out.add_kernel(sym_contract(f, g, r), coeff);
            }
        }
    }
    out.prune();
    return out;
}

double expectation(const ChaosExpansion& F) {
    return F.constant();
}

ChaosExpansion gamma_pair(const ChaosExpansion& F, const ChaosExpansion& G) {
    if (F.dim() != G.dim()) throw ShapeError("gamma_pair: dim mismatch");
    ChaosExpansion out(F.dim());
    for (const auto& [p, f] : F.kernels()) {
        for (const auto& [q, g] : G.kernels()) {
            for (int r = 1; r <= std::min(p, q); ++r) {
                const double coeff = to_double(
                    p * factorial(r - 1) * binomial(p - 1, r - 1) * binomial(q - 1, r - 1));
                out.add_kernel(sym_contract(f, g, r), coeff);
            }
        }
    }
    out.prune();
    return out;
}

ChaosExpansion gamma(const ChaosExpansion& F, int j) {
    if (j < 0) throw std::invalid_argument("gamma: j must be >= 0");
    ChaosExpansion g = F;
    for (int i = 0; i < j; ++i) g = gamma_pair(F, g);
    return g;
}

double cumulant_via_gamma(const ChaosExpansion& F, int s) {
    if (s < 1) throw std::invalid_argument("cumulant_via_gamma: s must be >= 1");
    return to_double(factorial(s - 1)) * expectation(gamma(F, s - 1));
}

MomentSequence moments(const ChaosExpansion& F, int m, int order_cap) {
    if (m < 1) throw std::invalid_argument("moments: m must be >= 1");
    MomentSequence mu;
    mu.reserve(m);
    ChaosExpansion power = F;
    mu.push_back(expectation(power));
    for (int k = 2; k <= m; ++k) {
        power = multiply(power, F, order_cap);
        mu.push_back(expectation(power));
    }
    return mu;
}

// E(X^{m+1}) = sum_{s=0}^m C(m,s) kappa_{s+1} E(X^{m-s}), solved in the
// forward direction for kappa_{m+1} and backward for E(X^{m+1}).
CumulantSequence moments_to_cumulants(const MomentSequence& mu) {
    const int n = static_cast<int>(mu.size());
    CumulantSequence kappa(n, 0.0);
    auto moment = [&](int k) { return k == 0 ? 1.0 : mu[k - 1]; };
    for (int m = 0; m < n; ++m) {
        double rest = 0.0;
        for (int s = 0; s < m; ++s)
            rest += to_double(binomial(m, s)) * kappa[s] * moment(m - s);
        kappa[m] = moment(m + 1) - rest;
    }
    return kappa;
}

MomentSequence cumulants_to_moments(const CumulantSequence& kappa) {
    const int n = static_cast<int>(kappa.size());
    MomentSequence mu(n, 0.0);
    auto moment = [&](int k) { return k == 0 ? 1.0 : mu[k - 1]; };
    for (int m = 0; m < n; ++m) {
        double acc = 0.0;
        for (int s = 0; s <= m; ++s)
            acc += to_double(binomial(m, s)) * kappa[s] * moment(m - s);
        mu[m] = acc;
    }
    return mu;
}

}  // namespace wchaos
