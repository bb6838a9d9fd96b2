#pragma once

#include <random>

#include "capelli/matrix.hpp"
#include "capelli/weyl.hpp"

namespace capelli {

// Seeded generators for the property-test batteries. Oracle comparisons are
// exact, so the distributions just need to exercise the kernels.
inline WeylInt random_weyl(int n, int max_terms, int max_degree, std::mt19937_64& rng,
                           int coeff_range = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> slot(0, 2 * n - 1);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    WeylInt w(n);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        const int d = deg(rng);
        for (int p = 0; p < d; ++p) {
            const int s = slot(rng);
            if (s < n) m.xw = exp_add(m.xw, exp_unit(s + 1));
            else m.dw = exp_add(m.dw, exp_unit(s - n + 1));
        }
        const int c = coeff(rng);
        if (c != 0) w.add_term(m, Int(c));
    }
    return w;
}

inline WeylInt random_polynomial(int n, int max_terms, int max_degree, std::mt19937_64& rng,
                                 int coeff_range = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> var(1, n);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    WeylInt w(n);
    const int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        const int d = deg(rng);
        for (int p = 0; p < d; ++p) m.xw = exp_add(m.xw, exp_unit(var(rng)));
        const int c = coeff(rng);
        if (c != 0) w.add_term(m, Int(c));
    }
    return w;
}

inline WeylMatrixInt random_weyl_matrix(int n, int max_terms, int max_degree,
                                        std::mt19937_64& rng, int coeff_range = 3) {
    WeylMatrixInt m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = random_weyl(n, max_terms, max_degree, rng, coeff_range);
    return m;
}

} // namespace capelli
