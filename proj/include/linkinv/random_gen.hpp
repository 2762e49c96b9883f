#pragma once

#include <cstdint>
#include <random>

#include "linkinv/int_matrix.hpp"

namespace linkinv {

// Seeded generator with portable integer draws (raw engine output reduced by
// modulus, so sequences do not depend on the standard library).
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }

    long range(long lo, long hi) { return lo + below(hi - lo + 1); }

    bool coin() { return (next() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

IntMatrix random_int_matrix(Rng& rng, int n, long lo, long hi);

// Random even symmetric nondegenerate matrix of the given size with
// |det| <= max_abs_det (resamples until both hold).
IntMatrix random_even_form(Rng& rng, int n, long max_abs_det);

// Product of at most max_factors elementary transvections and signed swaps;
// resamples if any entry exceeds max_entry.
IntMatrix random_unimodular(Rng& rng, int n, int max_factors = 6, long max_entry = 10);

} // namespace linkinv
