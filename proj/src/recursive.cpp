#include "wchaos/recursive.hpp"

#include <cmath>

namespace wchaos {

namespace {

bool g_corrupt_cq = false;

// Shared feasibility checks for the depth-first walks below.
struct RWalk {
    int q;
    int depth;   // number of r_i to place
    int target;  // required total when an exact sum is demanded, -1 otherwise
    int strict_upto;  // partial sums strict below (k+1)q/2 for k <= strict_upto
};

BigInt cq_step(int q, int k, int prefix_sum, int r) {
    return q * factorial(r - 1) * binomial(k * q - 2 * prefix_sum - 1, r - 1) *
           binomial(q - 1, r - 1);
}

}  // namespace

void set_cq_corruption(bool on) {
    g_corrupt_cq = on;
}

std::vector<RVector> enumerate_rvectors(int q, int s) {
    if (q < 2) throw std::invalid_argument("enumerate_rvectors: q must be >= 2");
    if (s < 3) throw std::invalid_argument("enumerate_rvectors: s must be >= 3");
    std::vector<RVector> out;
    if ((s * q) % 2 != 0) return out;
    const int depth = s - 2;
    const int target = (s - 2) * q / 2;

    std::vector<int> rs;
    auto dfs = [&](auto&& self, int k, int sum) -> void {
        if (k > depth) {
            if (sum == target) out.push_back({q, s, rs});
            return;
        }
        const int remaining = depth - k;
        int hi = (k == 1) ? q : std::min(q, k * q - 2 * sum);  // (i), (iv)
        for (int r = 1; r <= hi; ++r) {
            const int ns = sum + r;
            if (ns + remaining > target) break;              // unreachable low
            if (ns + remaining * q < target) continue;       // unreachable high
            if (k <= depth - 1 && 2 * ns >= (k + 1) * q) continue;  // (iii)
            rs.push_back(r);
            self(self, k + 1, ns);
            rs.pop_back();
        }
    };
    dfs(dfs, 1, 0);
    return out;
}

BigInt cq(int q, const std::vector<int>& rs) {
    if (rs.empty()) throw std::invalid_argument("cq: empty r-vector");
    BigInt c = 1;
    int sum = 0;
    for (std::size_t a = 0; a < rs.size(); ++a) {
        const int r = rs[a];
        if (r < 1 || r > q) throw std::invalid_argument("cq: entry out of range");
        c *= cq_step(q, static_cast<int>(a) + 1, sum, r);
        sum += r;
    }
    return c;
}

double kappa_recursive(const SymTensor& f, int s) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("kappa_recursive: kernel order must be >= 2");
    if (s < 1) throw std::invalid_argument("kappa_recursive: s must be >= 1");
    if (s == 1) return 0.0;
    const double var = to_double(factorial(q)) * inner_product(f, f);
    if (s == 2) return var;
    if ((s * q) % 2 != 0) return 0.0;

    const int depth = s - 2;
    const int target = (s - 2) * q / 2;
    double acc = 0.0;

    // Depth-first over admissible r-vectors; the iterated contraction for a
    // shared prefix is computed once and passed down.
    auto dfs = [&](auto&& self, int k, int sum, const SymTensor& h, const BigInt& c) -> void {
        const int remaining = depth - k;
        const int hi = (k == 1) ? q : std::min(q, k * q - 2 * sum);
        for (int r = 1; r <= hi; ++r) {
            const int ns = sum + r;
            if (ns + remaining > target) break;
            if (ns + remaining * q < target) continue;
            if (k <= depth - 1 && 2 * ns >= (k + 1) * q) continue;
            const BigInt nc = c * cq_step(q, k, sum, r);
            const SymTensor nh = sym_contract(h, f, r);
            if (k == depth)
                acc += to_double(nc) * inner_product(nh, f);
            else
                self(self, k + 1, ns, nh, nc);
        }
    };
    dfs(dfs, 1, 0, f, BigInt(1));

    double result = to_double(factorial(q) * factorial(s - 1)) * acc;
    if (g_corrupt_cq) result *= 1.001;
    return result;
}

ChaosExpansion gamma_expansion_chaos(const SymTensor& f, int s) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("gamma_expansion_chaos: kernel order must be >= 2");
    if (s < 2) throw std::invalid_argument("gamma_expansion_chaos: s must be >= 2");

    const int depth = s - 1;
    ChaosExpansion out(f.dim());

    auto dfs = [&](auto&& self, int k, int sum, const SymTensor& h, const BigInt& c) -> void {
        const int hi = (k == 1) ? q : std::min(q, k * q - 2 * sum);
        for (int r = 1; r <= hi; ++r) {
            const int ns = sum + r;
            if (k <= depth - 1 && 2 * ns >= (k + 1) * q) continue;
            const BigInt nc = c * cq_step(q, k, sum, r);
            const SymTensor nh = sym_contract(h, f, r);
            if (k == depth)
                out.add_kernel(nh, to_double(nc));
            else
                self(self, k + 1, ns, nh, nc);
        }
    };
    dfs(dfs, 1, 0, f, BigInt(1));
    out.prune();
    return out;
}

double kappa4_contraction_form(const SymTensor& f) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("kappa4_contraction_form: order must be >= 2");
    double acc = 0.0;
    for (int r = 1; r <= q - 1; ++r) {
        const BigInt w = BigInt(r) * factorial(r) * factorial(r) *
                         binomial(q, r) * binomial(q, r) * binomial(q, r) * binomial(q, r) *
                         factorial(2 * q - 2 * r);
        const double nrm = norm(sym_contract(f, f, r));
        acc += to_double(w) * nrm * nrm;
    }
    return 3.0 / q * acc;
}

double kappa4_nunugio_form(const SymTensor& f) {
    const int q = f.order();
    if (q < 2) throw std::invalid_argument("kappa4_nunugio_form: order must be >= 2");
    const BigInt q4 = factorial(q) * factorial(q) * factorial(q) * factorial(q);
    double acc = 0.0;
    for (int r = 1; r <= q - 1; ++r) {
        const BigInt den = factorial(r) * factorial(r) * factorial(q - r) * factorial(q - r);
        const double coeff = to_double(q4) / to_double(den);
        const double plain = norm(contract(f, f, r));
        const double symm = norm(sym_contract(f, f, r));
        acc += coeff * (plain * plain +
                        to_double(binomial(2 * q - 2 * r, q - r)) * symm * symm);
    }
    return acc;
}

}  // namespace wchaos
