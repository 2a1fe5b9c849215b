#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "wchaos/combinatorics.hpp"
#include "wchaos/symtensor.hpp"

namespace wchaos {

// Seeded random symmetric kernel: entries i.i.d. uniform on [-1, 1] over the
// sorted indices. When normalize is set, scaled so that q! ||f||^2 = 1.
inline SymTensor random_kernel(int q, int dim, std::uint64_t seed, bool normalize = true) {
    SymTensor f(q, dim);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < f.size(); ++i)
        f[i] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
    if (normalize) {
        const double var = to_double(factorial(q)) * inner_product(f, f);
        f = scale(f, 1.0 / std::sqrt(var));
    }
    return f;
}

}  // namespace wchaos
