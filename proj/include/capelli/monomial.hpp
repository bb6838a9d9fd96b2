#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace capelli {

// At most 8 variables; exponents of x_1..x_n and of the matching derivatives
// are packed one byte per variable, variable 1 in the most significant byte,
// so that unsigned comparison of the packed word is lexicographic comparison
// of the exponent vector.
inline constexpr int kMaxVars = 8;
inline constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

using ExpWord = std::uint64_t;

inline constexpr int exp_shift(int var) { return 8 * (kMaxVars - var); }

inline int exp_at(ExpWord w, int var) {
    return static_cast<int>((w >> exp_shift(var)) & 0xffu);
}

inline ExpWord exp_set(ExpWord w, int var, int e) {
    const int s = exp_shift(var);
    return (w & ~(ExpWord(0xff) << s)) | (ExpWord(e & 0xff) << s);
}

inline ExpWord exp_unit(int var) { return ExpWord(1) << exp_shift(var); }

// Sum of the 8 byte fields. Valid while the total stays below 256, which the
// arithmetic layer guarantees by keeping every exponent below 128.
inline int exp_total(ExpWord w) {
    return static_cast<int>((w * 0x0101010101010101ULL) >> 56);
}

// Byte-wise sum; requires every field of both operands < 128 so no field can
// carry into its neighbour.
inline ExpWord exp_add(ExpWord a, ExpWord b) {
    if ((a | b) & kHighBits) throw std::overflow_error("exponent overflow");
    return a + b;
}

// Byte-wise difference; caller guarantees a >= b field-wise.
inline ExpWord exp_sub(ExpWord a, ExpWord b) { return a - b; }

// True iff a >= b in every byte field (fields < 128).
inline bool exp_geq(ExpWord a, ExpWord b) {
    return (((a | kHighBits) - b) & kHighBits) == kHighBits;
}

// Normal-ordered word x^xw * D^dw (D_i the i-th partial derivative).
struct Monomial {
    ExpWord xw = 0;
    ExpWord dw = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;

    int xdeg() const { return exp_total(xw); }
    int ddeg() const { return exp_total(dw); }
    int degree() const { return xdeg() + ddeg(); }

    template <typename H>
    friend H AbslHashValue(H h, const Monomial& m) {
        return H::combine(std::move(h), m.xw, m.dw);
    }
};

// Graded lexicographic: by total degree, then lexicographically on the
// concatenated exponent vector (x part first).
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.xw != b.xw) return a.xw < b.xw;
    return a.dw < b.dw;
}

} // namespace capelli
