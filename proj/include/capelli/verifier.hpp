#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "capelli/det.hpp"
#include "capelli/division_algebra.hpp"
#include "capelli/matrix.hpp"
#include "capelli/table.hpp"

namespace capelli {

using DiagSpec = std::vector<Int>;

struct RunOptions {
    int threads = 1;
    DetOrder order = DetOrder::ColumnAscending;
    std::uint64_t memory_cap_bytes = 0;
    int abort_after_layer = -1;
    std::string checkpoint_dir;  // empty = checkpointing off
    bool resume = false;
};

struct VerificationReport {
    std::string table_name;
    DiagSpec diag;
    bool identity_holds = false;
    std::uint64_t residual_terms = 0;
    std::vector<std::string> residual_sample;  // leading terms, graded-lex
    std::uint64_t lhs_terms = 0;
    std::uint64_t rhs_terms = 0;
    DetStats det_stats;
    int threads = 1;
    std::string det_order = "column";
    double elapsed_ms = 0.0;
};

struct SearchReport {
    std::string table_name;
    std::vector<Int> multiset;
    std::vector<DiagSpec> satisfying;   // lexicographic order
    std::uint64_t candidates_tested = 0;
    std::uint64_t constraint_count = 0;  // distinct coefficient polynomials
    std::uint64_t residual_terms = 0;    // of the symbolic residual
    std::uint64_t lhs_terms = 0;
    std::uint64_t rhs_terms = 0;
    DetStats det_stats;
    int threads = 1;
    double elapsed_ms = 0.0;
};

struct ActionChecks {
    long long s = 0;
    Int scalar;            // (4s+6)(4s+4)^2(4s+2)
    bool det_b_scales = false;   // det B on P^{s+1} = scalar * P^s
    bool diagonal_scales = false;  // every AB diagonal entry: (4s+4) * P^{s+1}
    bool offdiag_annihilates = false;  // every off-diagonal entry kills P, P^2
};

struct ActionReport {
    std::string table_name;
    std::vector<ActionChecks> checks;
    bool all_ok = false;
};

// The paper-form matrix of the table: entry (i,j) = sign * x_index.
WeylMatrixInt build_a_matrix(const TableMatrix& t);
// Transpose with x_k -> D_k.
WeylMatrixInt build_b_matrix(const TableMatrix& t);

// det A * det B (both commutative determinants, multiplied in that order).
WeylInt lhs(const TableMatrix& t);

// Column-determinant of A B + diag.
WeylInt rhs(const TableMatrix& t, const DiagSpec& diag, const RunOptions& opt = {},
            DetStats* stats = nullptr);
WeylDiag rhs_symbolic(const TableMatrix& t, const RunOptions& opt = {},
                      DetStats* stats = nullptr, const std::string& table_name = {});

VerificationReport verify_identity(const TableMatrix& t, const DiagSpec& diag,
                                   const RunOptions& opt = {},
                                   const std::string& table_name = {});

// One symbolic column-determinant, then one cheap substitution per distinct
// permutation of the multiset.
SearchReport search_diag(const TableMatrix& t, const std::vector<Int>& multiset,
                         const RunOptions& opt = {}, const std::string& table_name = {});

// The SO(4)-action diagnostics, exact, at integer specializations of s.
ActionReport action_report(const TableMatrix& t, const std::vector<long long>& s_values,
                           const std::string& table_name = {});

// Sign-adjusted diagonal list for dimension 4: the three reference patterns,
// negated according to triple_sign. The orientation is pinned by the n = 4
// verification sweep.
std::vector<DiagSpec> theorem_diag_list(const TableMatrix& t);

// The three reference diagonal patterns for n = 4.
const std::vector<DiagSpec>& reference_diags_4();

} // namespace capelli
