#include "linkinv/random_gen.hpp"

#include "linkinv/exact_linalg.hpp"

namespace linkinv {

IntMatrix random_int_matrix(Rng& rng, int n, long lo, long hi) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = rng.range(lo, hi);
    return m;
}

IntMatrix random_even_form(Rng& rng, int n, long max_abs_det) {
    while (true) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            m.at(i, i) = 2 * rng.range(-3, 3);
            for (int j = i + 1; j < n; ++j) {
                m.at(i, j) = rng.range(-3, 3);
                m.at(j, i) = m.at(i, j);
            }
        }
        Int det = determinant(m);
        if (det != 0 && abs(det) <= max_abs_det)
            return m;
    }
}

IntMatrix random_unimodular(Rng& rng, int n, int max_factors, long max_entry) {
    while (true) {
        IntMatrix p = IntMatrix::identity(n);
        int factors = 1 + static_cast<int>(rng.below(max_factors));
        for (int f = 0; f < factors; ++f) {
            if (n == 1) {
                if (rng.coin())
                    p.at(0, 0) = -p.at(0, 0);
                continue;
            }
            int i = static_cast<int>(rng.below(n));
            int j = static_cast<int>(rng.below(n - 1));
            if (j >= i)
                ++j;
            switch (rng.below(3)) {
            case 0: { // transvection: row i += c * row j
                long c = rng.range(-2, 2);
                if (c != 0)
                    p.add_row_multiple(i, j, Int(c));
                break;
            }
            case 1: // swap
                p.swap_rows(i, j);
                break;
            default: // sign flip
                p.negate_row(i);
                break;
            }
        }
        bool bounded = true;
        for (int i = 0; i < n && bounded; ++i)
            for (int j = 0; j < n && bounded; ++j)
                if (abs(p.at(i, j)) > max_entry)
                    bounded = false;
        if (bounded)
            return p;
    }
}

} // namespace linkinv
