#include "wchaos/montecarlo.hpp"

#include <cmath>
#include <numbers>

namespace wchaos {

double hermite(int q, double x) {
    if (q < 0) throw std::invalid_argument("hermite: q must be >= 0");
    double hm1 = 0.0, h = 1.0;  // H_{-1}, H_0
    for (int k = 0; k < q; ++k) {
        const double next = x * h - k * hm1;
        hm1 = h;
        h = next;
    }
    return h;
}

double NormalStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1;
    do {
        u1 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

ChaosEvaluator::ChaosEvaluator(const ChaosExpansion& F)
    : dim_(F.dim()), max_order_(0), constant_(F.constant()) {
    for (const auto& [q, f] : F.kernels()) {
        max_order_ = std::max(max_order_, q);
        MultiIndex alpha(q, 0);
        for (std::size_t flat = 0; flat < f.size(); ++flat) {
            if (f[flat] != 0.0) {
                Term t;
                t.coeff = f[flat] * multiset_permutations(alpha);
                t.powers = value_multiplicities(alpha);
                terms_.push_back(std::move(t));
            }
            next_multiindex(alpha, dim_);
        }
    }
}

double ChaosEvaluator::operator()(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != dim_) throw ShapeError("evaluate: dim mismatch");
    // H_0..H_max for every coordinate, then per-term product lookups
    std::vector<double> h((max_order_ + 1) * dim_);
    for (int k = 0; k < dim_; ++k) {
        double hm1 = 0.0, hv = 1.0;
        h[k] = 1.0;
        for (int q = 1; q <= max_order_; ++q) {
            const double next = x[k] * hv - (q - 1) * hm1;
            hm1 = hv;
            hv = next;
            h[q * dim_ + k] = hv;
        }
    }
    double acc = constant_;
    for (const auto& t : terms_) {
        double prod = t.coeff;
        for (const auto& [coord, ord] : t.powers) prod *= h[ord * dim_ + coord];
        acc += prod;
    }
    return acc;
}

double evaluate(const ChaosExpansion& F, const std::vector<double>& x) {
    return ChaosEvaluator(F)(x);
}

std::vector<EstimatorResult> estimate_cumulants(const ChaosExpansion& F, int s_max,
                                                long n_samples, std::uint64_t seed) {
    if (s_max < 2) throw std::invalid_argument("estimate_cumulants: s_max must be >= 2");
    if (n_samples < 1000) throw std::invalid_argument("estimate_cumulants: N must be >= 1000");

    const ChaosEvaluator eval(F);
    const int d = F.dim();
    const int B = kBatchCount;
    const long per_batch = n_samples / B;
    const long total = per_batch * B;

    // power sums per batch; each batch has its own sub-stream
    std::vector<std::vector<double>> batch_sums(B, std::vector<double>(s_max, 0.0));
#pragma omp parallel for schedule(static)
    for (int b = 0; b < B; ++b) {
        NormalStream stream(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(b + 1));
        std::vector<double> x(d);
        auto& sums = batch_sums[b];
        for (long i = 0; i < per_batch; ++i) {
            for (int k = 0; k < d; ++k) x[k] = stream.next();
            const double v = eval(x);
            double p = 1.0;
            for (int s = 0; s < s_max; ++s) {
                p *= v;
                sums[s] += p;
            }
        }
    }

    // pooled moments -> point estimates; batch cumulants -> standard errors
    MomentSequence pooled(s_max, 0.0);
    for (int b = 0; b < B; ++b)
        for (int s = 0; s < s_max; ++s) pooled[s] += batch_sums[b][s];
    for (int s = 0; s < s_max; ++s) pooled[s] /= static_cast<double>(total);
    const CumulantSequence point = moments_to_cumulants(pooled);

    std::vector<CumulantSequence> batch_kappa(B);
    for (int b = 0; b < B; ++b) {
        MomentSequence mu(s_max);
        for (int s = 0; s < s_max; ++s) mu[s] = batch_sums[b][s] / static_cast<double>(per_batch);
        batch_kappa[b] = moments_to_cumulants(mu);
    }

    std::vector<EstimatorResult> out;
    for (int s = 0; s < s_max; ++s) {
        double mean = 0.0;
        for (int b = 0; b < B; ++b) mean += batch_kappa[b][s];
        mean /= B;
        double var = 0.0;
        for (int b = 0; b < B; ++b) {
            const double dlt = batch_kappa[b][s] - mean;
            var += dlt * dlt;
        }
        var /= (B - 1);
        out.push_back({s + 1, point[s], std::sqrt(var / B), total, seed});
    }
    return out;
}

}  // namespace wchaos
