#include <doctest.h>

#include <cmath>

#include "wchaos/montecarlo.hpp"
#include "wchaos/random_kernel.hpp"

using namespace wchaos;

namespace {

bool close(double a, double b, double rel = 1e-10) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1.0});
}

ChaosExpansion random_expansion(int dim, int max_q, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    ChaosExpansion F(dim, 0.3 * (static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5));
    for (int q = 1; q <= max_q; ++q)
        F.add_kernel(scale(random_kernel(q, dim, rng(), false), 0.4));
    return F;
}

}  // namespace

TEST_CASE("hermite polynomials") {
    for (double x : {-1.7, 0.0, 0.3, 2.5}) {
        CHECK(hermite(0, x) == doctest::Approx(1.0));
        CHECK(hermite(1, x) == doctest::Approx(x));
        CHECK(hermite(2, x) == doctest::Approx(x * x - 1.0));
        CHECK(hermite(3, x) == doctest::Approx(x * x * x - 3.0 * x));
        // recurrence cross-check at higher order
        CHECK(hermite(6, x) ==
              doctest::Approx(x * hermite(5, x) - 5.0 * hermite(4, x)));
    }
}

TEST_CASE("evaluate examples") {
    const std::vector<double> x = {0.7, -1.2};

    // I_1(e_1) = x_1
    CHECK(evaluate(ChaosExpansion::integral(SymTensor::basis(2, 0)), x) ==
          doctest::Approx(0.7));

    // I_2(e_1 (x) e_1) = x_1^2 - 1
    SymTensor diag(2, 2);
    diag.set({0, 0}, 1.0);
    CHECK(evaluate(ChaosExpansion::integral(diag), x) ==
          doctest::Approx(0.7 * 0.7 - 1.0));

    // I_2(e_1 (~x) e_2) = x_1 x_2 (off-diagonal multiplicity 2, value 1/2)
    SymTensor off(2, 2);
    off.set({0, 1}, 0.5);
    CHECK(evaluate(ChaosExpansion::integral(off), x) ==
          doctest::Approx(0.7 * -1.2));

    // constants pass through
    CHECK(evaluate(ChaosExpansion(2, 3.25), x) == doctest::Approx(3.25));
}

TEST_CASE("evaluate respects the multiplication formula pointwise") {
    std::mt19937_64 rng(301);
    auto u = [&] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0; };
    for (int seed = 0; seed < 5; ++seed) {
        const ChaosExpansion F = random_expansion(3, 2, 310 + seed);
        const ChaosExpansion G = random_expansion(3, 2, 320 + seed);
        const ChaosExpansion FG = multiply(F, G);
        for (int trial = 0; trial < 10; ++trial) {
            const std::vector<double> x = {u(), u(), u()};
            CHECK(close(evaluate(F, x) * evaluate(G, x), evaluate(FG, x), 1e-9));
        }
    }
}

TEST_CASE("normal stream moments and estimator sanity bands") {
    // E[I_q(f)] ~ 0, E[I_q(f)^2] ~ q! ||f||^2 within 3 standard errors
    const long n = 200000;
    for (int q = 1; q <= 3; ++q) {
        const SymTensor f = random_kernel(q, 3, 330 + q, true);
        const ChaosExpansion F = ChaosExpansion::integral(f);
        const auto res = estimate_cumulants(F, 2, n, 7700 + q);
        REQUIRE(res.size() == 2);
        CHECK(res[0].s == 1);
        CHECK(res[1].s == 2);
        CHECK(std::abs(res[0].estimate - 0.0) <= 3.0 * res[0].stderr_);
        CHECK(std::abs(res[1].estimate - 1.0) <= 3.0 * res[1].stderr_);
        CHECK(res[1].stderr_ > 0.0);
        CHECK(res[1].n_samples == n);
    }

    // orthogonality across chaoses: E[I_1 I_2] ~ 0
    const ChaosExpansion sum = [&] {
        ChaosExpansion F(2);
        F.add_kernel(SymTensor::basis(2, 0));
        SymTensor g(2, 2);
        g.set({0, 1}, 0.5);
        F.add_kernel(g);
        return F;
    }();
    // kappa_2 of the sum is 1 + 2 ||g||^2 = 2 (||g||^2 = 2 * 0.5^2 = 0.5)
    const auto res = estimate_cumulants(sum, 2, n, 7711);
    CHECK(std::abs(res[1].estimate - 2.0) <= 3.0 * res[1].stderr_);
}

TEST_CASE("chi-squared cumulants within three standard errors") {
    SymTensor unit(2, 1);
    unit.set({0, 0}, 1.0);
    const ChaosExpansion F = ChaosExpansion::integral(unit);
    const auto res = estimate_cumulants(F, 4, 400000, 4242);
    const double want[4] = {0.0, 2.0, 8.0, 48.0};
    for (int s = 1; s <= 4; ++s)
        CHECK(std::abs(res[s - 1].estimate - want[s - 1]) <= 3.0 * res[s - 1].stderr_);
}

TEST_CASE("estimates are bit-reproducible for a fixed seed") {
    const ChaosExpansion F = random_expansion(3, 3, 360);
    const auto a = estimate_cumulants(F, 4, 50000, 1234);
    const auto b = estimate_cumulants(F, 4, 50000, 1234);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].estimate == b[i].estimate);
        CHECK(a[i].stderr_ == b[i].stderr_);
        CHECK(a[i].seed == b[i].seed);
    }

    const auto c = estimate_cumulants(F, 4, 50000, 1235);
    CHECK(a[1].estimate != c[1].estimate);

    CHECK_THROWS_AS(estimate_cumulants(F, 4, 100, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_cumulants(F, 1, 50000, 1), std::invalid_argument);
}
