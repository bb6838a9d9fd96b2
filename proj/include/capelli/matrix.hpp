#pragma once

#include <stdexcept>
#include <vector>

#include "capelli/weyl.hpp"

namespace capelli {

// Square matrix over the Weyl algebra. Entries share one algebra context.
template <class C>
class WeylMatrix {
public:
    WeylMatrix() = default;
    explicit WeylMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, WeylElement<C>(n)) {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("WeylMatrix: bad dimension");
    }

    static WeylMatrix identity(int n) {
        WeylMatrix m(n);
        for (int i = 1; i <= n; ++i) m.at(i, i) = WeylElement<C>::constant(n, C(1));
        return m;
    }

    int dim() const { return n_; }
    WeylElement<C>& at(int i, int j) { return e_[idx(i, j)]; }
    const WeylElement<C>& at(int i, int j) const { return e_[idx(i, j)]; }

    friend bool operator==(const WeylMatrix& a, const WeylMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("WeylMatrix index");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }
    int n_ = 0;
    std::vector<WeylElement<C>> e_;
};

using WeylMatrixInt = WeylMatrix<Int>;
using WeylMatrixDiag = WeylMatrix<DiagPoly>;

// (ab)_ij = sum_k a_ik * b_kj; the factor order is load-bearing here.
template <class C>
WeylMatrix<C> mat_mul(const WeylMatrix<C>& a, const WeylMatrix<C>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("mat_mul: dimension mismatch");
    const int n = a.dim();
    WeylMatrix<C> r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) mul_acc(r.at(i, j), a.at(i, k), b.at(k, j));
    return r;
}

// m + diag(values) for concrete integers.
template <class C>
WeylMatrix<C> add_diag(const WeylMatrix<C>& m, const std::vector<Int>& values) {
    if (static_cast<int>(values.size()) != m.dim())
        throw std::invalid_argument("add_diag: diag length mismatch");
    WeylMatrix<C> r = m;
    for (int i = 1; i <= m.dim(); ++i) r.at(i, i).add_term(Monomial{}, C(static_cast<Int>(values[i - 1])));
    return r;
}

// m + diag(d_1, ..., d_n) with the shifts carried as central parameters.
inline WeylMatrixDiag add_diag_symbolic(const WeylMatrixDiag& m) {
    WeylMatrixDiag r = m;
    for (int i = 1; i <= m.dim(); ++i) r.at(i, i).add_term(Monomial{}, DiagPoly::parameter(i));
    return r;
}

inline WeylMatrixDiag lift(const WeylMatrixInt& m) {
    WeylMatrixDiag r(m.dim());
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j) r.at(i, j) = lift(m.at(i, j));
    return r;
}

template <class C>
WeylMatrix<C> transpose(const WeylMatrix<C>& m) {
    WeylMatrix<C> r(m.dim());
    for (int i = 1; i <= m.dim(); ++i)
        for (int j = 1; j <= m.dim(); ++j) r.at(i, j) = m.at(j, i);
    return r;
}

// Transpose and substitute x_k -> D_k. Every entry must be a single signed
// variable (the shape of the multiplication-table matrices).
inline WeylMatrixInt transpose_substitute(const WeylMatrixInt& m) {
    const int n = m.dim();
    WeylMatrixInt r(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const WeylInt& src = m.at(j, i);
            if (src.term_count() != 1)
                throw std::invalid_argument("transpose_substitute: entry is not a signed variable");
            const auto& [mono, coeff] = *src.terms().begin();
            if (mono.dw != 0 || exp_total(mono.xw) != 1 || (coeff != 1 && coeff != -1))
                throw std::invalid_argument("transpose_substitute: entry is not a signed variable");
            r.at(i, j).add_term(Monomial{0, mono.xw}, coeff);
        }
    }
    return r;
}

} // namespace capelli
