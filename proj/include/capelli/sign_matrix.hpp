#pragma once

#include <cstdint>
#include <vector>

#include "capelli/table.hpp"

namespace capelli {

// Small integer matrix for the U_i / K_i bookkeeping of the admissibility
// analysis. Entries are tiny; plain int avoids any overflow worry.
class SignMatrix {
public:
    SignMatrix() = default;
    explicit SignMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, 0) {}

    static SignMatrix identity(int n);
    int dim() const { return n_; }
    int& at(int i, int j) { return e_[(i - 1) * std::size_t(n_) + (j - 1)]; }
    int at(int i, int j) const { return e_[(i - 1) * std::size_t(n_) + (j - 1)]; }

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

    SignMatrix transposed() const;
    SignMatrix negated() const;
    bool is_skew() const;                  // M^T == -M
    bool is_orthogonal() const;            // M^T M == I
    bool is_zero() const;

private:
    int n_ = 0;
    std::vector<int> e_;
};

SignMatrix operator*(const SignMatrix& a, const SignMatrix& b);
SignMatrix operator+(const SignMatrix& a, const SignMatrix& b);

// Column i of a normalized admissible table equals U_i X; extracts U_i and
// verifies it is skew-symmetric and orthogonal.
SignMatrix extract_u(const TableMatrix& t, int i);

// Diagonal matrix with +1 at positions 1 and i, -1 elsewhere. The i = 2 case
// is explicit in the construction; larger i follows the same pattern.
SignMatrix k_matrix(int n, int i);

// U_i U_j == -U_j U_i for all 2 <= i < j <= n.
bool check_anticommutation(const TableMatrix& t);

// U_i^T K_i K_j U_j skew-symmetric for all pairs, plus the random-vector
// orthogonality of the rows L^T, L^T U_i^T K_i (exact rationals, fixed seed).
bool check_skew_products(const TableMatrix& t, int trials = 20, std::uint64_t seed = 0x5eed);

// Skew iff P^T M P vanishes for every vector: each extracted U_i passes the
// random-vector direction, and the E_11 perturbation of each fails it.
bool lemma_skew_battery(const TableMatrix& t, int trials = 100, std::uint64_t seed = 0x5eed);

// With the basis relabeled so that U_2 e_3 = -e_4, checks
// [U_2, S] U_3 + [U_3, S] U_2 == 0 for S = K_2 K_3.
bool commutator_identity_check(const TableMatrix& t);

} // namespace capelli
