#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace capelli {

// Signed basis variable: sign * x_index, index in 1..n.
struct SignedVar {
    int sign = 1;    // +1 or -1
    int index = 0;   // 1..n

    friend bool operator==(const SignedVar&, const SignedVar&) = default;
    int encoded() const { return sign * index; }
};

// Raw combinatorial multiplication-table matrix: entry (i,j) = sign * x_index.
// Admissibility is a property that gets checked, never assumed.
class TableMatrix {
public:
    TableMatrix() = default;
    explicit TableMatrix(int n);

    int dim() const { return n_; }
    SignedVar& at(int i, int j) { return e_[idx(i, j)]; }
    const SignedVar& at(int i, int j) const { return e_[idx(i, j)]; }

    friend bool operator==(const TableMatrix&, const TableMatrix&) = default;

    // Lexicographic on the concatenated rows of encoded entries.
    friend bool operator<(const TableMatrix& a, const TableMatrix& b);

    std::string to_text() const;  // the table file format
    static TableMatrix from_text(const std::string& text);

private:
    std::size_t idx(int i, int j) const;
    int n_ = 0;
    std::vector<SignedVar> e_;
};

struct PropertyReport {
    bool prop_i = false;    // rows/columns signed permutations
    bool prop_ii = false;   // 2x2 pairing rule
    bool prop_iii = false;  // constant diagonal
    std::string violation;  // human-readable witness for the first failure

    bool all() const { return prop_i && prop_ii && prop_iii; }
};

PropertyReport check_properties(const TableMatrix& t);

// True iff diagonal all -x_1 and first row is -x_1, x_2, ..., x_n.
bool is_normalized(const TableMatrix& t);

// Basis moves used by normalization. All preserve the admissibility
// predicates; see normalize() for how they compose.
TableMatrix relabel_simultaneous(const TableMatrix& t, const std::vector<int>& perm,
                                 const std::vector<int>& signs);
TableMatrix rename_variables(const TableMatrix& t, const std::vector<int>& varperm);
TableMatrix flip_row_col_var(const TableMatrix& t, int i);
TableMatrix negate_all(const TableMatrix& t);

struct NormalizeResult {
    TableMatrix table;
    std::vector<std::string> moves;  // applied in order
};

// Bring an admissible table to the normal form (diagonal -x_1, first row
// -x_1, x_2, ..., x_n). Throws if the table is not admissible.
NormalizeResult normalize(const TableMatrix& t);

// Built-in named tables: "real-standard" (n=1), "complex-standard" (n=2),
// "quaternion-paper" (n=4), "octonion-standard" (n=8).
const std::vector<std::string>& builtin_table_names();
std::optional<TableMatrix> builtin_table(const std::string& name);

// Load from a built-in name or a file path; second member is the table name
// used in reports (the name, or the file stem).
std::pair<TableMatrix, std::string> load_table(const std::string& source);

} // namespace capelli
