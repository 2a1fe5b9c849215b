#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wchaos/chaos.hpp"

namespace wchaos {

// Probabilists' Hermite polynomial H_q(x) by the three-term recurrence.
double hermite(int q, double x);

/// Precompiled evaluator for a chaos expansion: each kernel entry becomes a
/// weighted product of Hermite polynomials in the sample coordinates.
class ChaosEvaluator {
  public:
    explicit ChaosEvaluator(const ChaosExpansion& F);

    int dim() const { return dim_; }
    double operator()(const std::vector<double>& x) const;

  private:
    struct Term {
        double coeff;  // kernel value times multi-index multiplicity
        std::vector<std::pair<int, int>> powers;  // (coordinate, hermite order)
    };
    int dim_;
    int max_order_;
    double constant_;
    std::vector<Term> terms_;
};

double evaluate(const ChaosExpansion& F, const std::vector<double>& x);

struct EstimatorResult {
    int s = 0;
    double estimate = 0.0;
    double stderr_ = 0.0;
    long n_samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr int kBatchCount = 50;

// Seeded Monte Carlo estimates of kappa_s, s = 1..s_max, via sample raw
// moments inverted through the moment/cumulant recursion. Standard errors
// come from batch means over kBatchCount batches. Bit-reproducible for a
// fixed seed, N and build.
std::vector<EstimatorResult> estimate_cumulants(const ChaosExpansion& F, int s_max,
                                                long n_samples, std::uint64_t seed);

// Deterministic standard normal stream: Box-Muller on 53-bit uniforms drawn
// from a seeded mt19937_64, so results are identical across platforms.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : rng_(seed) {}
    double next();

  private:
    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace wchaos
