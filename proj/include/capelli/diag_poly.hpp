#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "capelli/bigint.hpp"

namespace capelli {

// Exponent vector of the central parameters d_1..d_n, one nibble per
// parameter, d_1 in the most significant nibble (unsigned comparison is
// lexicographic). Degrees stay at or below the dimension, far from overflow.
using DiagKey = std::uint32_t;

inline constexpr int diag_shift(int i) { return 4 * (8 - i); }
inline DiagKey diag_unit(int i) { return DiagKey(1) << diag_shift(i); }
inline int diag_exp_at(DiagKey k, int i) {
    return static_cast<int>((k >> diag_shift(i)) & 0xfu);
}
inline int diag_degree(DiagKey k) {
    std::uint32_t s = (k & 0x0f0f0f0fu) + ((k >> 4) & 0x0f0f0f0fu);
    return static_cast<int>((s * 0x01010101u) >> 24);
}
inline DiagKey diag_key_mul(DiagKey a, DiagKey b) {
    if ((a | b) & 0x88888888u) throw std::overflow_error("diag exponent overflow");
    return a + b;
}

// A polynomial with Int coefficients in the central parameters d_1..d_n.
// Terms are kept sorted by packed key, no zero coefficients; the inline
// capacity of one covers the dominant constant / single-parameter case.
class DiagPoly {
public:
    struct Term {
        DiagKey key;
        Int coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };
    using Terms = boost::container::small_vector<Term, 1>;

    DiagPoly() = default;
    DiagPoly(int v) { if (v != 0) t_.push_back({0, Int(v)}); }
    explicit DiagPoly(Int v) { if (!capelli::is_zero(v)) t_.push_back({0, std::move(v)}); }

    static DiagPoly parameter(int i) {
        DiagPoly p;
        p.t_.push_back({diag_unit(i), Int(1)});
        return p;
    }
    static DiagPoly monomial(DiagKey k, Int c) {
        DiagPoly p;
        if (!capelli::is_zero(c)) p.t_.push_back({k, std::move(c)});
        return p;
    }

    const Terms& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].key == 0); }

    // Constant term; requires is_constant().
    const Int& constant() const {
        static const Int kZero = 0;
        if (t_.empty()) return kZero;
        if (!is_constant()) throw std::logic_error("DiagPoly: non-constant used as constant");
        return t_[0].coeff;
    }

    friend bool operator==(const DiagPoly& a, const DiagPoly& b) { return a.t_ == b.t_; }
    bool operator==(int v) const {
        if (v == 0) return t_.empty();
        return t_.size() == 1 && t_[0].key == 0 && t_[0].coeff == v;
    }

    DiagPoly& operator+=(const DiagPoly& o) { add_scaled(o, 1); return *this; }
    DiagPoly& operator-=(const DiagPoly& o) { add_scaled(o, -1); return *this; }

    // *this += s * o with s a machine scalar (the hot accumulate path).
    void add_scaled(const DiagPoly& o, long long s) {
        if (s == 0 || o.t_.empty()) return;
        Terms merged;
        merged.reserve(t_.size() + o.t_.size());
        std::size_t i = 0, j = 0;
        while (i < t_.size() && j < o.t_.size()) {
            if (t_[i].key < o.t_[j].key) {
                merged.push_back(std::move(t_[i++]));
            } else if (t_[i].key > o.t_[j].key) {
                merged.push_back({o.t_[j].key, o.t_[j].coeff * s});
                ++j;
            } else {
                Int c = std::move(t_[i].coeff);
                c += o.t_[j].coeff * s;
                if (!capelli::is_zero(c)) merged.push_back({t_[i].key, std::move(c)});
                ++i; ++j;
            }
        }
        for (; i < t_.size(); ++i) merged.push_back(std::move(t_[i]));
        for (; j < o.t_.size(); ++j) merged.push_back({o.t_[j].key, o.t_[j].coeff * s});
        t_ = std::move(merged);
    }

    void add_term(DiagKey k, const Int& c) {
        if (capelli::is_zero(c)) return;
        auto it = std::lower_bound(t_.begin(), t_.end(), k,
                                   [](const Term& t, DiagKey key) { return t.key < key; });
        if (it != t_.end() && it->key == k) {
            it->coeff += c;
            if (capelli::is_zero(it->coeff)) t_.erase(it);
        } else {
            t_.insert(it, {k, c});
        }
    }

    DiagPoly& operator*=(const Int& s) {
        if (capelli::is_zero(s)) { t_.clear(); return *this; }
        for (auto& t : t_) t.coeff *= s;
        return *this;
    }
    DiagPoly& operator*=(long long s) {
        if (s == 0) { t_.clear(); return *this; }
        for (auto& t : t_) t.coeff *= s;
        return *this;
    }

    DiagPoly& operator*=(const DiagPoly& o) {
        if (t_.empty()) return *this;
        if (o.t_.empty()) { t_.clear(); return *this; }
        if (o.t_.size() == 1) {  // scaling by a monomial keeps the order
            const DiagKey k = o.t_[0].key;
            for (auto& t : t_) {
                t.key = diag_key_mul(t.key, k);
                t.coeff *= o.t_[0].coeff;
            }
            return *this;
        }
        DiagPoly acc;
        for (const auto& a : t_)
            for (const auto& b : o.t_) acc.add_term(diag_key_mul(a.key, b.key), a.coeff * b.coeff);
        *this = std::move(acc);
        return *this;
    }

    DiagPoly operator-() const {
        DiagPoly p = *this;
        for (auto& t : p.t_) t.coeff = -t.coeff;
        return p;
    }

    // Evaluate at d_i = values[i-1]; values.size() bounds the live parameters.
    Int eval(const std::vector<Int>& values) const {
        Int r = 0;
        for (const auto& t : t_) {
            Int m = t.coeff;
            for (int i = 1; i <= static_cast<int>(values.size()) && !capelli::is_zero(m); ++i) {
                for (int e = diag_exp_at(t.key, i); e > 0; --e) m *= values[i - 1];
            }
            r += m;
        }
        return r;
    }

    std::size_t term_count() const { return t_.size(); }

    template <typename H>
    friend H AbslHashValue(H h, const DiagPoly& p) {
        for (const auto& t : p.t_) {
            h = H::combine(std::move(h), t.key, t.coeff.sign());
            const auto& be = t.coeff.backend();
            for (unsigned i = 0; i < be.size(); ++i)
                h = H::combine(std::move(h), static_cast<std::uint64_t>(be.limbs()[i]));
        }
        return H::combine(std::move(h), p.t_.size());
    }

private:
    Terms t_;
};

inline bool is_zero(const DiagPoly& p) { return p.zero(); }

} // namespace capelli
