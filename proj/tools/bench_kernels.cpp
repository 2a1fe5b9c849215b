// Times the OpenMP contraction/diagram/sampling kernels against the serial
// reference paths on a few desk-scale workloads.

#include <chrono>
#include <cstdio>

#include <omp.h>

#include "wchaos/diagrams.hpp"
#include "wchaos/montecarlo.hpp"
#include "wchaos/random_kernel.hpp"
#include "wchaos/recursive.hpp"
#include "wchaos/reference.hpp"

using namespace wchaos;

namespace {

template <typename F>
double time_ms(F&& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

volatile double sink;

}  // namespace

int main() {
    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-36s %12s %12s %8s\n", "kernel", "serial(ms)", "omp(ms)", "speedup");

    {
        const SymTensor f = random_kernel(3, 6, 7);
        const double ser = time_ms([&] { sink = norm(reference::contract(f, f, 1)); });
        const double par = time_ms([&] { sink = norm(contract(f, f, 1)); });
        std::printf("%-36s %12.2f %12.2f %8.2f\n", "contract q=3 d=6 r=1", ser, par, ser / par);
    }
    {
        const SymTensor f = random_kernel(2, 48, 7);
        const double ser = time_ms([&] { sink = norm(reference::contract(f, f, 1)); });
        const double par = time_ms([&] { sink = norm(contract(f, f, 1)); });
        std::printf("%-36s %12.2f %12.2f %8.2f\n", "contract q=2 d=48 r=1", ser, par, ser / par);
    }
    {
        const SymTensor f = random_kernel(2, 4, 7);
        const auto graphs = enumerate_K(6, 2);
        const double ser = time_ms([&] {
            double acc = 0.0;
            for (const auto& g : graphs)
                acc += to_double(weight(g)) * graph_contraction_bruteforce(f, g);
            sink = acc;
        });
        const double par = time_ms([&] { sink = kappa_diagram(f, 6); });
        std::printf("%-36s %12.2f %12.2f %8.2f\n", "kappa_diagram s=6 q=2 d=4", ser, par,
                    ser / par);
    }
    {
        const SymTensor f = random_kernel(3, 3, 7);
        const ChaosExpansion F = ChaosExpansion::integral(f);
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
        const double ser =
            time_ms([&] { sink = estimate_cumulants(F, 4, 200000, 11)[3].estimate; }, 2);
        omp_set_num_threads(saved);
        const double par =
            time_ms([&] { sink = estimate_cumulants(F, 4, 200000, 11)[3].estimate; }, 2);
        std::printf("%-36s %12.2f %12.2f %8.2f\n", "monte carlo q=3 d=3 N=2e5", ser, par,
                    ser / par);
    }
    return 0;
}
