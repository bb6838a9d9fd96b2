#include "capelli/division_algebra.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace capelli {

DivisionAlgebraTable::DivisionAlgebraTable(int n)
    : n_(n), c_(static_cast<std::size_t>(n) * n) {}

std::vector<Rational> DivisionAlgebraTable::mul(const std::vector<Rational>& a,
                                                const std::vector<Rational>& b) const {
    if (static_cast<int>(a.size()) != n_ || static_cast<int>(b.size()) != n_)
        throw std::invalid_argument("algebra mul: wrong vector length");
    std::vector<Rational> r(n_, Rational(0));
    for (int i = 1; i <= n_; ++i) {
        if (a[i - 1] == 0) continue;
        for (int j = 1; j <= n_; ++j) {
            if (b[j - 1] == 0) continue;
            const SignedVar& p = product(i, j);
            Rational term = a[i - 1] * b[j - 1];
            if (p.sign < 0) term = -term;
            r[p.index - 1] += term;
        }
    }
    return r;
}

DivisionAlgebraTable build_algebra(const TableMatrix& t, bool auto_normalize) {
    if (!check_properties(t).all())
        throw std::invalid_argument("build_algebra: table is not admissible");
    TableMatrix nt = t;
    if (!is_normalized(nt)) {
        if (!auto_normalize)
            throw std::invalid_argument("build_algebra: table not normalized");
        nt = normalize(t).table;
    }
    const int n = nt.dim();
    DivisionAlgebraTable alg(n);
    for (int j = 1; j <= n; ++j) {
        alg.product(1, j) = SignedVar{1, j};
        alg.product(j, 1) = SignedVar{1, j};
    }
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j) alg.product(i, j) = nt.at(i, j);
    return alg;
}

namespace {

std::vector<Rational> random_rational_vector(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

Rational norm2(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& x : v) s += x * x;
    return s;
}

} // namespace

bool norm_multiplicative(const DivisionAlgebraTable& alg, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = alg.dim();
    for (int t = 0; t < trials; ++t) {
        const auto a = random_rational_vector(n, rng);
        const auto b = random_rational_vector(n, rng);
        if (norm2(alg.mul(a, b)) != norm2(a) * norm2(b)) return false;
    }
    return true;
}

bool check_alternative(const DivisionAlgebraTable& alg, int trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = alg.dim();
    for (int t = 0; t < trials; ++t) {
        const auto x = random_rational_vector(n, rng);
        const auto y = random_rational_vector(n, rng);
        const auto z = random_rational_vector(n, rng);
        if (alg.mul(x, alg.mul(x, y)) != alg.mul(alg.mul(x, x), y)) return false;
        if (alg.mul(alg.mul(y, x), x) != alg.mul(y, alg.mul(x, x))) return false;
        // Moufang: (xy)(zx) = x((yz)x)
        if (alg.mul(alg.mul(x, y), alg.mul(z, x)) !=
            alg.mul(x, alg.mul(alg.mul(y, z), x)))
            return false;
    }
    return true;
}

std::optional<std::array<int, 3>> find_nonassociative_triple(const DivisionAlgebraTable& alg) {
    const int n = alg.dim();
    auto basis = [&](int i) {
        std::vector<Rational> v(n, Rational(0));
        v[i - 1] = 1;
        return v;
    };
    for (int i = 2; i <= n; ++i)
        for (int j = 2; j <= n; ++j)
            for (int k = 2; k <= n; ++k)
                if (alg.mul(alg.mul(basis(i), basis(j)), basis(k)) !=
                    alg.mul(basis(i), alg.mul(basis(j), basis(k))))
                    return std::array<int, 3>{i, j, k};
    return std::nullopt;
}

int triple_sign(const TableMatrix& t) {
    if (t.dim() != 4) throw std::invalid_argument("triple_sign: dimension must be 4");
    const DivisionAlgebraTable alg = build_algebra(t);
    const SignedVar e34 = alg.product(3, 4);
    const SignedVar prod = alg.product(2, e34.index);
    if (prod.index != 1) throw std::logic_error("triple_sign: e_2 (e_3 e_4) is not scalar");
    return e34.sign * prod.sign;
}

DivisionAlgebraTable quaternion_structure() {
    // e_2 e_3 = e_4 cyclically; squares of the imaginary units are -1.
    DivisionAlgebraTable alg(4);
    for (int j = 1; j <= 4; ++j) {
        alg.product(1, j) = SignedVar{1, j};
        alg.product(j, 1) = SignedVar{1, j};
    }
    for (int i = 2; i <= 4; ++i) alg.product(i, i) = SignedVar{-1, 1};
    const std::array<std::array<int, 3>, 1> cycles = {{{2, 3, 4}}};
    for (const auto& c : cycles) {
        for (int r = 0; r < 3; ++r) {
            const int a = c[r], b = c[(r + 1) % 3], d = c[(r + 2) % 3];
            alg.product(a, b) = SignedVar{1, d};
            alg.product(b, a) = SignedVar{-1, d};
        }
    }
    return alg;
}

DivisionAlgebraTable octonion_structure() {
    // Imaginary units e_2..e_8 indexed 1..7 with the cyclic Fano triples
    // (t, t+1, t+3) mod 7; each triple multiplies like a quaternion copy.
    DivisionAlgebraTable alg(8);
    for (int j = 1; j <= 8; ++j) {
        alg.product(1, j) = SignedVar{1, j};
        alg.product(j, 1) = SignedVar{1, j};
    }
    for (int i = 2; i <= 8; ++i) alg.product(i, i) = SignedVar{-1, 1};
    for (int t = 0; t < 7; ++t) {
        const int a = t + 2, b = ((t + 1) % 7) + 2, c = ((t + 3) % 7) + 2;
        const std::array<std::array<int, 3>, 3> rot = {{{a, b, c}, {b, c, a}, {c, a, b}}};
        for (const auto& p : rot) {
            alg.product(p[0], p[1]) = SignedVar{1, p[2]};
            alg.product(p[1], p[0]) = SignedVar{-1, p[2]};
        }
    }
    return alg;
}

TableMatrix table_from_structure(const DivisionAlgebraTable& alg) {
    const int n = alg.dim();
    TableMatrix t(n);
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            const SignedVar p = alg.product(k, j);  // e_k e_j = p.sign * e_{p.index}
            t.at(p.index, j) = SignedVar{-p.sign, k};
        }
    return t;
}

} // namespace capelli
