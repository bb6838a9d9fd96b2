#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "capelli/bigint.hpp"
#include "capelli/table.hpp"

namespace capelli {

// Basis-to-signed-basis structure constants: e_i e_j = sign * e_index,
// with e_1 the multiplicative identity.
class DivisionAlgebraTable {
public:
    DivisionAlgebraTable() = default;
    explicit DivisionAlgebraTable(int n);

    int dim() const { return n_; }
    SignedVar& product(int i, int j) { return c_[(i - 1) * std::size_t(n_) + (j - 1)]; }
    const SignedVar& product(int i, int j) const {
        return c_[(i - 1) * std::size_t(n_) + (j - 1)];
    }

    // Product of coordinate vectors in the basis, exact arithmetic.
    std::vector<Rational> mul(const std::vector<Rational>& a,
                              const std::vector<Rational>& b) const;

private:
    int n_ = 0;
    std::vector<SignedVar> c_;
};

// Build the algebra from a normalized admissible table: products of the
// non-identity basis elements come from entries (i, j), i, j >= 2; row and
// column 1 are fixed by the identity. With auto_normalize the table is
// normalized first; otherwise a non-normalized table is an error.
DivisionAlgebraTable build_algebra(const TableMatrix& t, bool auto_normalize = true);

// N(ab) == N(a) N(b) for `trials` random exact-rational vectors.
bool norm_multiplicative(const DivisionAlgebraTable& alg, int trials,
                         std::uint64_t seed = 0x5eed);

// Alternative laws x(xy) == (xx)y, (yx)x == y(xx) and the Moufang identity
// (xy)(zx) == x((yz)x) on random exact-rational triples.
bool check_alternative(const DivisionAlgebraTable& alg, int trials,
                       std::uint64_t seed = 0x5eed);

// First basis triple (i,j,k), i,j,k >= 2, with (e_i e_j) e_k != e_i (e_j e_k),
// if any. Quaternions have none; octonions do.
std::optional<std::array<int, 3>> find_nonassociative_triple(const DivisionAlgebraTable& alg);

// Sign s with e_2 (e_3 e_4) = s * 1, from the structure constants; n = 4 only.
int triple_sign(const TableMatrix& t);

// Structure constants of the reference algebras (e_1 = 1).
DivisionAlgebraTable quaternion_structure();
DivisionAlgebraTable octonion_structure();

// The table matrix of left multiplication for generic alpha = sum x_i e_i,
// negated so the diagonal is -x_1 (the normal form): entry (m, j) = -s x_k
// whenever e_k e_j = s e_m.
TableMatrix table_from_structure(const DivisionAlgebraTable& alg);

} // namespace capelli
