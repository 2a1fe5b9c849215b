#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace wchaos {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(n, k) for n >= 0; zero when k > n or k < 0. Negative n is rejected
// because in this codebase it always signals an inadmissible prefix.
inline BigInt binomial(int n, int k) {
    if (n < 0) throw std::domain_error("binomial: negative upper argument");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline double to_double(const BigInt& x) {
    return x.convert_to<double>();
}

}  // namespace wchaos
