#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "capelli/bigint.hpp"
#include "capelli/diag_poly.hpp"
#include "capelli/monomial.hpp"

namespace capelli {

enum class Gen { Variable, Derivative };

inline void coeff_add_scaled(Int& dst, const Int& src, long long s) {
    if (s == 1) dst += src;
    else if (s == -1) dst -= src;
    else dst += src * s;
}
inline void coeff_add_scaled(DiagPoly& dst, const DiagPoly& src, long long s) {
    dst.add_scaled(src, s);
}
inline void coeff_negate(Int& c) { c = -c; }
inline void coeff_negate(DiagPoly& c) { c = -c; }

// Approximate live size in 8-byte units beyond the term slot itself.
inline std::size_t coeff_weight(const Int& c) { return c.backend().size(); }
inline std::size_t coeff_weight(const DiagPoly& p) {
    std::size_t w = 0;
    for (const auto& t : p.terms()) w += 5 + t.coeff.backend().size();
    return w;
}

// An element of the Weyl algebra A_n in canonical normal-ordered form:
// a map from normal-ordered monomials to nonzero coefficients. C is the
// (central, commutative) coefficient ring: Int, or DiagPoly when the
// diagonal shifts are carried symbolically.
template <class C>
class WeylElement {
public:
    using TermMap = absl::flat_hash_map<Monomial, C>;

    WeylElement() = default;
    explicit WeylElement(int n) : n_(n) {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("WeylElement: bad dimension");
    }

    static WeylElement constant(int n, C c) {
        WeylElement e(n);
        e.add_term(Monomial{}, std::move(c));
        return e;
    }
    static WeylElement generator(int n, Gen kind, int i) {
        WeylElement e(n);
        if (i < 1 || i > n) throw std::out_of_range("generator index out of range");
        Monomial m;
        if (kind == Gen::Variable) m.xw = exp_unit(i);
        else m.dw = exp_unit(i);
        e.add_term(m, C(1));
        return e;
    }

    int vars() const { return n_; }
    bool zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Monomial& m, C c) {
        if (is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(c));
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    // terms += s * c at m, avoiding temporaries on the accumulate path.
    void acc_term(const Monomial& m, const C& c, long long s) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            C v = c;
            if (s != 1) v *= s;
            if (!is_zero(v)) terms_.emplace(m, std::move(v));
        } else {
            coeff_add_scaled(it->second, c, s);
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    void negate() {
        for (auto& [m, c] : terms_) coeff_negate(c);
    }

    void reserve(std::size_t k) { terms_.reserve(k); }
    void clear_release() { TermMap().swap(terms_); }

    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::size_t payload_weight() const {
        std::size_t w = 0;
        for (const auto& [m, c] : terms_) w += coeff_weight(c);
        return w;
    }

private:
    int n_ = 0;
    TermMap terms_;
};

using WeylInt = WeylElement<Int>;
using WeylDiag = WeylElement<DiagPoly>;

namespace detail {
inline void check_same_context(int a, int b) {
    if (a != b) throw std::invalid_argument("algebra context mismatch");
}
} // namespace detail

template <class C>
WeylElement<C> add(const WeylElement<C>& a, const WeylElement<C>& b) {
    detail::check_same_context(a.vars(), b.vars());
    WeylElement<C> r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

template <class C>
WeylElement<C> sub(const WeylElement<C>& a, const WeylElement<C>& b) {
    detail::check_same_context(a.vars(), b.vars());
    WeylElement<C> r = a;
    for (const auto& [m, c] : b.terms()) r.acc_term(m, c, -1);
    return r;
}

template <class C>
WeylElement<C> neg(const WeylElement<C>& a) {
    WeylElement<C> r = a;
    r.negate();
    return r;
}

// dst += sign * a * b, normal-ordering every cross term. The reordering
// kernel: D^b x^c = sum over contractions k <= min(b, c) of
// prod_i C(b_i,k_i) C(c_i,k_i) k_i!  x^(c-k) D^(b-k).
template <class C>
void mul_acc(WeylElement<C>& dst, const WeylElement<C>& a, const WeylElement<C>& b,
             int sign = 1) {
    detail::check_same_context(a.vars(), b.vars());
    detail::check_same_context(a.vars(), dst.vars());
    const int n = a.vars();

    for (const auto& [bm, bc] : b.terms()) {
        // Variables with a nonzero x-exponent on the right factor.
        int bvars[kMaxVars];
        int bexps[kMaxVars];
        int nb = 0;
        for (int i = 1; i <= n; ++i) {
            const int g = exp_at(bm.xw, i);
            if (g > 0) { bvars[nb] = i; bexps[nb] = g; ++nb; }
        }
        for (const auto& [am, ac] : a.terms()) {
            C cab = ac;
            cab *= bc;
            if (is_zero(cab)) continue;
            const Monomial m0{exp_add(am.xw, bm.xw), exp_add(am.dw, bm.dw)};
            dst.acc_term(m0, cab, sign);

            // Contractions against the derivative exponents of the left factor.
            int vars[kMaxVars], caps[kMaxVars], betas[kMaxVars], gammas[kMaxVars];
            int nv = 0;
            for (int t = 0; t < nb; ++t) {
                const int beta = exp_at(am.dw, bvars[t]);
                if (beta > 0) {
                    vars[nv] = bvars[t];
                    betas[nv] = beta;
                    gammas[nv] = bexps[t];
                    caps[nv] = std::min(beta, bexps[t]);
                    ++nv;
                }
            }
            if (nv == 0) continue;
            if (nv == 1 && caps[0] == 1) {
                // Dominant case in the determinant workloads: one overlap
                // variable, single contraction, factor beta * gamma.
                const ExpWord u = exp_unit(vars[0]);
                C c1 = cab;
                c1 *= static_cast<long long>(betas[0]) * gammas[0];
                dst.acc_term(Monomial{m0.xw - u, m0.dw - u}, c1, sign);
                continue;
            }
            int k[kMaxVars] = {0};
            for (;;) {
                int pos = 0;
                while (pos < nv && k[pos] == caps[pos]) { k[pos] = 0; ++pos; }
                if (pos == nv) break;
                ++k[pos];
                Int factor = 1;
                ExpWord kw = 0;
                for (int t = 0; t < nv; ++t) {
                    if (k[t] == 0) continue;
                    factor *= binomial(betas[t], k[t]) * binomial(gammas[t], k[t]) *
                              factorial(k[t]);
                    kw |= ExpWord(k[t]) << exp_shift(vars[t]);
                }
                C ck = cab;
                ck *= factor;
                dst.acc_term(Monomial{exp_sub(m0.xw, kw), exp_sub(m0.dw, kw)}, ck, sign);
            }
        }
    }
}

template <class C>
WeylElement<C> mul(const WeylElement<C>& a, const WeylElement<C>& b) {
    WeylElement<C> r(a.vars());
    mul_acc(r, a, b);
    return r;
}

template <class C>
WeylElement<C> operator+(const WeylElement<C>& a, const WeylElement<C>& b) { return add(a, b); }
template <class C>
WeylElement<C> operator-(const WeylElement<C>& a, const WeylElement<C>& b) { return sub(a, b); }
template <class C>
WeylElement<C> operator*(const WeylElement<C>& a, const WeylElement<C>& b) { return mul(a, b); }

inline bool is_pure_x(const WeylInt& p) {
    for (const auto& [m, c] : p.terms())
        if (m.dw != 0) return false;
    return true;
}

// Standard action on polynomials: x_i multiplies, D_i differentiates.
inline WeylInt apply(const WeylInt& w, const WeylInt& p) {
    detail::check_same_context(w.vars(), p.vars());
    if (!is_pure_x(p)) throw std::invalid_argument("apply: operand is not a polynomial");
    const int n = w.vars();
    WeylInt out(n);
    for (const auto& [wm, wc] : w.terms()) {
        for (const auto& [pm, pc] : p.terms()) {
            if (!exp_geq(pm.xw, wm.dw)) continue;
            Int factor = 1;
            for (int i = 1; i <= n; ++i) {
                const int b = exp_at(wm.dw, i);
                if (b > 0) factor *= falling_factorial(exp_at(pm.xw, i), b);
            }
            Monomial m{exp_add(wm.xw, exp_sub(pm.xw, wm.dw)), 0};
            out.add_term(m, wc * pc * factor);
        }
    }
    return out;
}

// Lift to symbolic-diagonal coefficients.
inline WeylDiag lift(const WeylInt& w) {
    WeylDiag r(w.vars());
    for (const auto& [m, c] : w.terms()) r.add_term(m, DiagPoly(c));
    return r;
}

// Evaluate the central parameters at concrete integers.
inline WeylInt substitute_diag(const WeylDiag& w, const std::vector<Int>& values) {
    WeylInt r(w.vars());
    for (const auto& [m, c] : w.terms()) {
        Int v = c.eval(values);
        if (!is_zero(v)) r.add_term(m, std::move(v));
    }
    return r;
}

// Requires every coefficient constant in the central parameters.
inline WeylInt to_int_element(const WeylDiag& w) {
    WeylInt r(w.vars());
    for (const auto& [m, c] : w.terms()) r.add_term(m, c.constant());
    return r;
}

inline WeylInt apply(const WeylDiag& w, const WeylInt& p) { return apply(to_int_element(w), p); }

template <class C>
std::vector<std::pair<Monomial, const C*>> sorted_view(const WeylElement<C>& w) {
    std::vector<std::pair<Monomial, const C*>> v;
    v.reserve(w.term_count());
    for (const auto& [m, c] : w.terms()) v.emplace_back(m, &c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return graded_lex_less(b.first, a.first);  // leading term first
    });
    return v;
}

// --- deterministic text form -------------------------------------------------
//
// Grammar (stable across runs, documented in the README):
//   element  := "0" | term { (" + " | " - ") term }
//   term     := [magnitude "*"] factors | magnitude | "(" diagpoly ")" ["*" factors]
//   factors  := factor { "*" factor }
//   factor   := ("x"|"D"|"d") index ["^" exponent]
// Terms in descending graded-lex order; x factors before D factors.

namespace detail {
inline void append_factors(std::string& s, const Monomial& m, bool& any) {
    for (int i = 1; i <= kMaxVars; ++i) {
        const int e = exp_at(m.xw, i);
        if (e == 0) continue;
        if (any) s += '*';
        s += 'x';
        s += std::to_string(i);
        if (e > 1) { s += '^'; s += std::to_string(e); }
        any = true;
    }
    for (int i = 1; i <= kMaxVars; ++i) {
        const int e = exp_at(m.dw, i);
        if (e == 0) continue;
        if (any) s += '*';
        s += 'D';
        s += std::to_string(i);
        if (e > 1) { s += '^'; s += std::to_string(e); }
        any = true;
    }
}

inline std::string diag_poly_to_string(const DiagPoly& p) {
    if (p.zero()) return "0";
    std::string s;
    bool first = true;
    std::vector<DiagPoly::Term> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        const int da = diag_degree(a.key), db = diag_degree(b.key);
        if (da != db) return da > db;
        return a.key > b.key;
    });
    for (const auto& t : ts) {
        const bool negative = t.coeff < 0;
        Int mag = negative ? Int(-t.coeff) : t.coeff;
        if (first) { if (negative) s += '-'; }
        else s += negative ? " - " : " + ";
        first = false;
        bool any = false;
        std::string body;
        for (int i = 1; i <= kMaxVars; ++i) {
            const int e = diag_exp_at(t.key, i);
            if (e == 0) continue;
            if (any) body += '*';
            body += 'd';
            body += std::to_string(i);
            if (e > 1) { body += '^'; body += std::to_string(e); }
            any = true;
        }
        if (!any) s += mag.str();
        else if (mag == 1) s += body;
        else { s += mag.str(); s += '*'; s += body; }
    }
    return s;
}

inline bool coeff_to_term_string(const Int& c, std::string& mag_out) {
    const bool negative = c < 0;
    Int mag = negative ? Int(-c) : c;
    mag_out = mag.str();
    return negative;
}
} // namespace detail

inline std::string term_to_string(const Monomial& m, const Int& c, bool leading) {
    std::string mag;
    const bool negative = detail::coeff_to_term_string(c, mag);
    std::string s = leading ? (negative ? "-" : "") : (negative ? " - " : " + ");
    bool any = false;
    std::string body;
    detail::append_factors(body, m, any);
    if (!any) s += mag;
    else if (mag == "1") s += body;
    else { s += mag; s += '*'; s += body; }
    return s;
}

inline std::string term_to_string(const Monomial& m, const DiagPoly& c, bool leading) {
    if (c.is_constant()) return term_to_string(m, c.constant(), leading);
    std::string s = leading ? "" : " + ";
    s += '(';
    s += detail::diag_poly_to_string(c);
    s += ')';
    bool any = true;
    std::string body;
    bool anyf = false;
    detail::append_factors(body, m, anyf);
    (void)any;
    if (anyf) { s += '*'; s += body; }
    return s;
}

template <class C>
std::string to_string(const WeylElement<C>& w) {
    if (w.zero()) return "0";
    std::string s;
    bool leading = true;
    for (const auto& [m, c] : sorted_view(w)) {
        s += term_to_string(m, *c, leading);
        leading = false;
    }
    return s;
}

} // namespace capelli
