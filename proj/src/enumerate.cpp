#include "capelli/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace capelli {

namespace {

struct Search {
    int n;
    bool normalized_only;
    TableMatrix grid;
    std::vector<char> filled;  // n*n presence flags
    std::vector<TableMatrix> out;

    bool has(int i, int j) const { return filled[(i - 1) * std::size_t(n) + (j - 1)] != 0; }
    void set(int i, int j, SignedVar v) {
        grid.at(i, j) = v;
        filled[(i - 1) * std::size_t(n) + (j - 1)] = 1;
    }
    void unset(int i, int j) { filled[(i - 1) * std::size_t(n) + (j - 1)] = 0; }

    static bool rule_ok(SignedVar a, SignedVar b, SignedVar c, SignedVar d) {
        if (a.index == d.index) {
            if (b.index != c.index) return false;
            if (a.sign == d.sign ? b.sign != -c.sign : b.sign != c.sign) return false;
        }
        if (b.index == c.index) {
            if (a.index != d.index) return false;
            if (b.sign == c.sign ? a.sign != -d.sign : a.sign != d.sign) return false;
        }
        return true;
    }

    bool candidate_ok(int i, int j, SignedVar v) {
        for (int k = 1; k <= n; ++k) {
            if (k != j && has(i, k) && grid.at(i, k).index == v.index) return false;
            if (k != i && has(k, j) && grid.at(k, j).index == v.index) return false;
        }
        if (i == j && has(1, 1) && !(i == 1) && !(grid.at(1, 1) == v)) return false;
        // 2x2 pairing rule against every completed submatrix through (i, j).
        for (int i2 = 1; i2 <= n; ++i2) {
            if (i2 == i || !has(i2, j)) continue;
            for (int j2 = 1; j2 <= n; ++j2) {
                if (j2 == j || !has(i, j2) || !has(i2, j2)) continue;
                const int r1 = std::min(i, i2), r2 = std::max(i, i2);
                const int c1 = std::min(j, j2), c2 = std::max(j, j2);
                auto cell = [&](int r, int c) { return r == i && c == j ? v : grid.at(r, c); };
                if (!rule_ok(cell(r1, c1), cell(r1, c2), cell(r2, c1), cell(r2, c2)))
                    return false;
            }
        }
        return true;
    }

    void dfs(std::size_t pos, const std::vector<std::pair<int, int>>& cells) {
        if (pos == cells.size()) {
            if (check_properties(grid).all()) out.push_back(grid);
            return;
        }
        const auto [i, j] = cells[pos];
        for (int enc = -n; enc <= n; ++enc) {
            if (enc == 0) continue;
            const SignedVar v{enc < 0 ? -1 : 1, enc < 0 ? -enc : enc};
            if (!candidate_ok(i, j, v)) continue;
            set(i, j, v);
            dfs(pos + 1, cells);
            unset(i, j);
        }
    }
};

} // namespace

std::vector<TableMatrix> enumerate_admissible(int n, bool normalized_only) {
    if (n == 8) {
        // Exhaustive search is out of reach here; the known seed table stands in.
        auto t = builtin_table("octonion-standard");
        return {*t};
    }
    if (n < 1 || n > 5)
        throw std::invalid_argument(
            "enumerate_admissible: exhaustive mode needs n <= 5 (n = 8 uses built-in seeds)");

    Search s{n, normalized_only, TableMatrix(n),
             std::vector<char>(static_cast<std::size_t>(n) * n, 0),
             {}};
    std::vector<std::pair<int, int>> cells;
    if (normalized_only) {
        s.set(1, 1, SignedVar{-1, 1});
        for (int j = 2; j <= n; ++j) s.set(1, j, SignedVar{1, j});
        for (int i = 2; i <= n; ++i) s.set(i, i, SignedVar{-1, 1});
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j) cells.emplace_back(i, j);
    } else {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) cells.emplace_back(i, j);
    }
    s.dfs(0, cells);
    std::sort(s.out.begin(), s.out.end());
    return s.out;
}

} // namespace capelli
