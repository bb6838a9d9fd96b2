#pragma once

#include <vector>

#include "capelli/table.hpp"

namespace capelli {

// Exhaustive backtracking over admissible tables, rows as signed permutations
// with the 2x2 pairing rule propagated during search. With normalized_only the
// first row and diagonal are pinned to the normal form. Results come back in
// lexicographic order of the encoded rows.
//
// n <= 5 in exhaustive mode; n = 8 returns the known built-in seed tables.
std::vector<TableMatrix> enumerate_admissible(int n, bool normalized_only = true);

} // namespace capelli
