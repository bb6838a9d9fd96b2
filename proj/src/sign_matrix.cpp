#include "capelli/sign_matrix.hpp"

#include <random>
#include <stdexcept>

#include "capelli/bigint.hpp"

namespace capelli {

SignMatrix SignMatrix::identity(int n) {
    SignMatrix m(n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
}

SignMatrix SignMatrix::transposed() const {
    SignMatrix r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) r.at(i, j) = at(j, i);
    return r;
}

SignMatrix SignMatrix::negated() const {
    SignMatrix r(n_);
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) r.at(i, j) = -at(i, j);
    return r;
}

bool SignMatrix::is_skew() const { return transposed() == negated(); }

bool SignMatrix::is_orthogonal() const {
    return transposed() * *this == identity(n_);
}

bool SignMatrix::is_zero() const {
    for (int v : e_)
        if (v != 0) return false;
    return true;
}

SignMatrix operator*(const SignMatrix& a, const SignMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("SignMatrix product: dimension");
    const int n = a.dim();
    SignMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            int s = 0;
            for (int k = 1; k <= n; ++k) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

SignMatrix operator+(const SignMatrix& a, const SignMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("SignMatrix sum: dimension");
    const int n = a.dim();
    SignMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

SignMatrix extract_u(const TableMatrix& t, int i) {
    const int n = t.dim();
    if (i < 2 || i > n) throw std::invalid_argument("extract_u: need 2 <= i <= n");
    if (!is_normalized(t)) throw std::invalid_argument("extract_u: table not normalized");
    SignMatrix u(n);
    for (int r = 1; r <= n; ++r) {
        const SignedVar v = t.at(r, i);  // (U_i X)_r = v.sign * x_{v.index}
        u.at(r, v.index) = v.sign;
    }
    if (!u.is_skew() || !u.is_orthogonal())
        throw std::logic_error("extract_u: U_i not skew-orthogonal (admissibility violation)");
    return u;
}

SignMatrix k_matrix(int n, int i) {
    SignMatrix k(n);
    for (int j = 1; j <= n; ++j) k.at(j, j) = (j == 1 || j == i) ? 1 : -1;
    return k;
}

bool check_anticommutation(const TableMatrix& t) {
    const int n = t.dim();
    for (int i = 2; i <= n; ++i) {
        const SignMatrix ui = extract_u(t, i);
        for (int j = i + 1; j <= n; ++j) {
            const SignMatrix uj = extract_u(t, j);
            if (!(ui * uj == (uj * ui).negated())) return false;
        }
    }
    return true;
}

namespace {

std::vector<Rational> random_vec(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-10, 10);
    std::uniform_int_distribution<int> den(1, 10);
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(num(rng), den(rng));
    return v;
}

std::vector<Rational> row_times(const std::vector<Rational>& l, const SignMatrix& m) {
    const int n = m.dim();
    std::vector<Rational> r(n, Rational(0));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            if (m.at(i, j) != 0) r[j - 1] += l[i - 1] * m.at(i, j);
    return r;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

bool check_skew_products(const TableMatrix& t, int trials, std::uint64_t seed) {
    const int n = t.dim();
    std::vector<SignMatrix> u(n + 1);
    for (int i = 2; i <= n; ++i) u[i] = extract_u(t, i);

    for (int i = 2; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const SignMatrix m = u[i].transposed() * k_matrix(n, i) * k_matrix(n, j) * u[j];
            if (!m.is_skew()) return false;
        }

    // Rows L^T, L^T U_i^T K_i pairwise orthogonal for random L.
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        const auto l = random_vec(n, rng);
        std::vector<std::vector<Rational>> rows;
        rows.push_back(l);
        for (int i = 2; i <= n; ++i)
            rows.push_back(row_times(l, u[i].transposed() * k_matrix(n, i)));
        for (std::size_t a = 0; a < rows.size(); ++a)
            for (std::size_t b = a + 1; b < rows.size(); ++b)
                if (dot(rows[a], rows[b]) != 0) return false;
    }
    return true;
}

namespace {

Rational quadratic_form(const std::vector<Rational>& p, const SignMatrix& m) {
    Rational s = 0;
    const int n = m.dim();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (m.at(i, j) != 0) s += p[i - 1] * p[j - 1] * m.at(i, j);
    return s;
}

} // namespace

bool lemma_skew_battery(const TableMatrix& t, int trials, std::uint64_t seed) {
    const int n = t.dim();
    std::mt19937_64 rng(seed);
    for (int i = 2; i <= n; ++i) {
        const SignMatrix m = extract_u(t, i);
        SignMatrix perturbed = m;
        perturbed.at(1, 1) += 1;
        bool perturbed_hit = false;
        for (int trial = 0; trial < trials; ++trial) {
            const auto p = random_vec(n, rng);
            if (quadratic_form(p, m) != 0) return false;
            if (quadratic_form(p, perturbed) != 0) perturbed_hit = true;
        }
        if (!perturbed_hit) return false;
    }
    return true;
}

bool commutator_identity_check(const TableMatrix& t) {
    const int n = t.dim();
    if (n < 4) throw std::invalid_argument("commutator_identity_check: needs n >= 4");
    TableMatrix w = is_normalized(t) ? t : normalize(t).table;

    // Relabel so that U_2 e_3 = -e_4 (the proof's convention).
    SignMatrix u2 = extract_u(w, 2);
    int m = 0, s = 0;
    for (int r = 1; r <= n; ++r)
        if (u2.at(r, 3) != 0) { m = r; s = u2.at(r, 3); }
    if (m == 1 || m == 2 || m == 3)
        throw std::logic_error("commutator_identity_check: unexpected U_2 image of e_3");
    if (m != 4) {
        std::vector<int> perm(n), signs(n, 1);
        for (int i = 1; i <= n; ++i) perm[i - 1] = i;
        std::swap(perm[3], perm[m - 1]);
        w = relabel_simultaneous(w, perm, signs);
        u2 = extract_u(w, 2);
        s = u2.at(4, 3);
    }
    if (s != -1) {
        w = flip_row_col_var(w, 4);
        u2 = extract_u(w, 2);
    }
    if (u2.at(4, 3) != -1)
        throw std::logic_error("commutator_identity_check: relabeling failed");

    const SignMatrix u3 = extract_u(w, 3);
    const SignMatrix sm = k_matrix(n, 2) * k_matrix(n, 3);
    auto comm = [](const SignMatrix& a, const SignMatrix& b) {
        return a * b + (b * a).negated();
    };
    const SignMatrix total = comm(u2, sm) * u3 + comm(u3, sm) * u2;
    return total.is_zero();
}

} // namespace capelli
