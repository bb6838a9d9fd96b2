#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace capelli {

struct SelfTestResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The oracle battery: determinant DP against the permutation-sum oracle,
// the normal-ordering kernel against operator actions, ring laws on random
// elements, substitution consistency, and the lemma checks on the built-in
// tables. Deterministic for a fixed seed.
std::vector<SelfTestResult> run_selftest(std::uint64_t seed = 0x5eed, bool quick = false);

} // namespace capelli
