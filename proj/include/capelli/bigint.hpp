#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace capelli {

// Exact integer and rational scalars. cpp_int keeps small values inline,
// which matters for the determinant workloads (most coefficients fit a word).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const Int& v) { return v.is_zero(); }

// n·(n-1)···(n-k+1), exact.
inline Int falling_factorial(unsigned n, unsigned k) {
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<unsigned>(n - i);
    return r;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= static_cast<unsigned>(n - k + i);
        r /= i;
    }
    return r;
}

inline Int factorial(unsigned n) { return falling_factorial(n, n); }

} // namespace capelli
