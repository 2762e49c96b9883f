#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace linkinv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the full property suite (linear algebra invariants, well-definedness
// of the linking and quadratic forms, Gauss-Milgram, reciprocity, duality,
// factorization, move invariance) with randomized inputs drawn from the seed.
std::vector<CheckResult> run_selftest(uint64_t seed, double tol = 1e-9);

} // namespace linkinv
