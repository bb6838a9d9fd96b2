#include "capelli/table.hpp"

#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "capelli/division_algebra.hpp"
#include "capelli/monomial.hpp"

namespace capelli {

TableMatrix::TableMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {
    if (n < 1 || n > kMaxVars) throw std::invalid_argument("TableMatrix: bad dimension");
}

std::size_t TableMatrix::idx(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("TableMatrix index");
    return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
}

bool operator<(const TableMatrix& a, const TableMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
        const int x = a.e_[k].encoded(), y = b.e_[k].encoded();
        if (x != y) return x < y;
    }
    return false;
}

std::string TableMatrix::to_text() const {
    std::ostringstream os;
    os << n_ << "\n";
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            if (j > 1) os << ' ';
            os << at(i, j).encoded();
        }
        os << "\n";
    }
    return os.str();
}

TableMatrix TableMatrix::from_text(const std::string& text) {
    std::istringstream is(text);
    int n = 0;
    if (!(is >> n)) throw std::runtime_error("table parse: missing dimension line");
    if (n < 1 || n > kMaxVars)
        throw std::runtime_error("table parse: dimension out of range 1..8");
    TableMatrix t(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            int v = 0;
            if (!(is >> v)) throw std::runtime_error("table parse: truncated entry grid");
            if (v == 0 || v < -n || v > n)
                throw std::runtime_error("table parse: entry out of range");
            t.at(i, j) = SignedVar{v < 0 ? -1 : 1, v < 0 ? -v : v};
        }
    }
    int extra;
    if (is >> extra) throw std::runtime_error("table parse: trailing data");
    return t;
}

namespace {

std::string entry_str(const SignedVar& v) {
    return (v.sign < 0 ? std::string("-x") : std::string("x")) + std::to_string(v.index);
}

std::string submatrix_str(const TableMatrix& t, int i1, int i2, int j1, int j2) {
    std::ostringstream os;
    os << "rows {" << i1 << "," << i2 << "} cols {" << j1 << "," << j2 << "}: [["
       << entry_str(t.at(i1, j1)) << ", " << entry_str(t.at(i1, j2)) << "], ["
       << entry_str(t.at(i2, j1)) << ", " << entry_str(t.at(i2, j2)) << "]]";
    return os.str();
}

} // namespace

PropertyReport check_properties(const TableMatrix& t) {
    PropertyReport r;
    const int n = t.dim();

    r.prop_i = true;
    for (int i = 1; i <= n && r.prop_i; ++i) {
        unsigned row_seen = 0, col_seen = 0;
        for (int j = 1; j <= n; ++j) {
            row_seen |= 1u << t.at(i, j).index;
            col_seen |= 1u << t.at(j, i).index;
        }
        const unsigned want = ((1u << n) - 1u) << 1;
        if (row_seen != want || col_seen != want) {
            r.prop_i = false;
            r.violation = "row or column " + std::to_string(i) +
                          " is not a signed permutation of x_1..x_n";
        }
    }

    r.prop_ii = true;
    for (int i1 = 1; i1 <= n && r.prop_ii; ++i1)
        for (int i2 = i1 + 1; i2 <= n && r.prop_ii; ++i2)
            for (int j1 = 1; j1 <= n && r.prop_ii; ++j1)
                for (int j2 = j1 + 1; j2 <= n && r.prop_ii; ++j2) {
                    const SignedVar a = t.at(i1, j1), b = t.at(i1, j2);
                    const SignedVar c = t.at(i2, j1), d = t.at(i2, j2);
                    // Pairing rule on both diagonals of the submatrix, both
                    // directions ("vise versa").
                    bool ok = true;
                    if (a.index == d.index) {
                        if (b.index != c.index) ok = false;
                        else if (a.sign == d.sign) ok = b.sign == -c.sign;
                        else ok = b.sign == c.sign;
                    }
                    if (ok && b.index == c.index) {
                        if (a.index != d.index) ok = false;
                        else if (b.sign == c.sign) ok = a.sign == -d.sign;
                        else ok = a.sign == d.sign;
                    }
                    if (!ok) {
                        r.prop_ii = false;
                        if (r.violation.empty())
                            r.violation = "2x2 pairing rule violated at " +
                                          submatrix_str(t, i1, i2, j1, j2);
                    }
                }

    r.prop_iii = true;
    for (int i = 2; i <= n; ++i)
        if (!(t.at(i, i) == t.at(1, 1))) {
            r.prop_iii = false;
            if (r.violation.empty())
                r.violation = "diagonal entries differ: (1,1) vs (" + std::to_string(i) + "," +
                              std::to_string(i) + ")";
            break;
        }
    return r;
}

bool is_normalized(const TableMatrix& t) {
    const int n = t.dim();
    if (!(t.at(1, 1) == SignedVar{-1, 1})) return false;
    for (int i = 2; i <= n; ++i)
        if (!(t.at(i, i) == SignedVar{-1, 1})) return false;
    for (int j = 2; j <= n; ++j)
        if (!(t.at(1, j) == SignedVar{1, j})) return false;
    return true;
}

TableMatrix relabel_simultaneous(const TableMatrix& t, const std::vector<int>& perm,
                                 const std::vector<int>& signs) {
    const int n = t.dim();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(signs.size()) != n)
        throw std::invalid_argument("relabel: wrong length");
    std::vector<int> inv(n + 1, 0);
    for (int i = 1; i <= n; ++i) inv[perm[i - 1]] = i;
    TableMatrix r(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const SignedVar v = t.at(perm[i - 1], perm[j - 1]);
            const int new_index = inv[v.index];
            const int s =
                signs[i - 1] * signs[j - 1] * signs[new_index - 1] * v.sign;
            r.at(i, j) = SignedVar{s, new_index};
        }
    }
    return r;
}

TableMatrix rename_variables(const TableMatrix& t, const std::vector<int>& varperm) {
    const int n = t.dim();
    if (static_cast<int>(varperm.size()) != n)
        throw std::invalid_argument("rename_variables: wrong length");
    TableMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const SignedVar v = t.at(i, j);
            r.at(i, j) = SignedVar{v.sign, varperm[v.index - 1]};
        }
    return r;
}

TableMatrix flip_row_col_var(const TableMatrix& t, int k) {
    const int n = t.dim();
    TableMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SignedVar v = t.at(i, j);
            if (i == k) v.sign = -v.sign;
            if (j == k) v.sign = -v.sign;
            if (v.index == k) v.sign = -v.sign;
            r.at(i, j) = v;
        }
    return r;
}

TableMatrix negate_all(const TableMatrix& t) {
    const int n = t.dim();
    TableMatrix r(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            SignedVar v = t.at(i, j);
            v.sign = -v.sign;
            r.at(i, j) = v;
        }
    return r;
}

NormalizeResult normalize(const TableMatrix& t) {
    if (!check_properties(t).all())
        throw std::invalid_argument("normalize: table is not admissible");
    const int n = t.dim();
    NormalizeResult res{t, {}};

    // 1. Move the diagonal variable to position 1 (simultaneous relabeling).
    const int diag_var = res.table.at(1, 1).index;
    if (diag_var != 1) {
        std::vector<int> perm(n), signs(n, 1);
        std::iota(perm.begin(), perm.end(), 1);
        std::swap(perm[0], perm[diag_var - 1]);
        res.table = relabel_simultaneous(res.table, perm, signs);
        res.moves.push_back("swap basis 1 <-> " + std::to_string(diag_var));
    }

    // 2. Make the diagonal -x_1.
    if (res.table.at(1, 1).sign > 0) {
        res.table = negate_all(res.table);
        res.moves.push_back("negate all (flip every basis element and variable)");
    }

    // 3. Sort the first row's variables: x at (1,j) becomes x_j.
    {
        std::vector<int> varperm(n, 0);
        varperm[0] = 1;
        for (int j = 2; j <= n; ++j) varperm[res.table.at(1, j).index - 1] = j;
        bool ident = true;
        for (int v = 1; v <= n; ++v) ident &= varperm[v - 1] == v;
        if (!ident) {
            res.table = rename_variables(res.table, varperm);
            res.moves.push_back("rename variables to sort the first row");
        }
    }

    // 4. Fix first-row signs with combined row/column/variable flips.
    for (int j = 2; j <= n; ++j)
        if (res.table.at(1, j).sign < 0) {
            res.table = flip_row_col_var(res.table, j);
            res.moves.push_back("flip basis element " + std::to_string(j));
        }

    if (!is_normalized(res.table) || !check_properties(res.table).all())
        throw std::logic_error("normalize: could not reach normal form");
    return res;
}

const std::vector<std::string>& builtin_table_names() {
    static const std::vector<std::string> names = {
        "real-standard", "complex-standard", "quaternion-paper", "octonion-standard"};
    return names;
}

std::optional<TableMatrix> builtin_table(const std::string& name) {
    if (name == "real-standard") {
        TableMatrix t(1);
        t.at(1, 1) = SignedVar{-1, 1};
        return t;
    }
    if (name == "complex-standard") {
        return TableMatrix::from_text("2\n-1 2\n-2 -1\n");
    }
    if (name == "quaternion-paper") {
        return table_from_structure(quaternion_structure());
    }
    if (name == "octonion-standard") {
        TableMatrix t = table_from_structure(octonion_structure());
        if (!check_properties(t).all())
            throw std::logic_error("octonion-standard failed admissibility at load");
        return t;
    }
    return std::nullopt;
}

std::pair<TableMatrix, std::string> load_table(const std::string& source) {
    if (auto t = builtin_table(source)) return {*t, source};
    std::ifstream in(source);
    if (!in) throw std::runtime_error("cannot open table source: " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    return {TableMatrix::from_text(buf.str()), std::filesystem::path(source).stem().string()};
}

} // namespace capelli
