#include "linkinv/exact_linalg.hpp"

#include <utility>

#include "linkinv/errors.hpp"

namespace linkinv {

Int determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw NonSquareError("determinant requires a square matrix");
    const int n = m.rows();
    IntMatrix b = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (b.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (b.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return 0;
            b.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j);
                mpz_divexact(b.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            b.at(i, k) = 0;
        }
        prev = b.at(k, k);
    }
    return sign > 0 ? b.at(n - 1, n - 1) : Int(-b.at(n - 1, n - 1));
}

int signature(const IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric())
        throw NonSymmetricError("signature requires a symmetric matrix");
    if (determinant(m) == 0)
        throw DegenerateError("signature requires a nondegenerate matrix");

    const int n = m.rows();
    RationalMatrix w = RationalMatrix::from_int(m);
    auto swap_sym = [&](int a, int b) {
        if (a == b)
            return;
        for (int j = 0; j < n; ++j)
            std::swap(w.at(a, j), w.at(b, j));
        for (int i = 0; i < n; ++i)
            std::swap(w.at(i, a), w.at(i, b));
    };
    auto add_sym = [&](int dst, int src, const Rat& f) {
        // congruence by I + f*E_{src,dst}: row then column
        for (int j = 0; j < n; ++j)
            w.at(dst, j) += f * w.at(src, j);
        for (int i = 0; i < n; ++i)
            w.at(i, dst) += f * w.at(i, src);
    };

    int sig = 0;
    for (int k = 0; k < n; ++k) {
        if (w.at(k, k) == 0) {
            int nz_diag = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, i) != 0) {
                    nz_diag = i;
                    break;
                }
            if (nz_diag >= 0) {
                swap_sym(k, nz_diag);
            } else {
                // remaining diagonal is all zero; pull in an off-diagonal entry
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (w.at(i, j) != 0) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0)
                    throw DegenerateError("degenerate block during diagonalization");
                add_sym(oi, oj, Rat(1)); // w(oi,oi) becomes 2*w(oi,oj) != 0
                swap_sym(k, oi);
            }
        }
        const Rat pivot = w.at(k, k);
        sig += sgn(pivot) > 0 ? 1 : -1;
        for (int i = k + 1; i < n; ++i) {
            if (w.at(i, k) == 0)
                continue;
            Rat f = -w.at(i, k) / pivot;
            add_sym(i, k, f);
        }
    }
    return sig;
}

RationalMatrix rational_inverse(const IntMatrix& m) {
    if (!m.is_square())
        throw NonSquareError("inverse requires a square matrix");
    const int n = m.rows();
    RationalMatrix a = RationalMatrix::from_int(m);
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw DegenerateError("matrix is singular");
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(k, j));
                std::swap(inv.at(pivot, j), inv.at(k, j));
            }
        Rat d = a.at(k, k);
        for (int j = 0; j < n; ++j) {
            a.at(k, j) /= d;
            inv.at(k, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0)
                continue;
            Rat f = a.at(i, k);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

namespace {

bool is_lone_pivot(const IntMatrix& d, int s) {
    for (int i = s + 1; i < d.rows(); ++i)
        if (d.at(i, s) != 0)
            return false;
    for (int j = s + 1; j < d.cols(); ++j)
        if (d.at(s, j) != 0)
            return false;
    return true;
}

// Smallest nonzero absolute value in d[s.., s..]; ties by lowest (row, col).
bool find_pivot(const IntMatrix& d, int s, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = s; i < d.rows(); ++i)
        for (int j = s; j < d.cols(); ++j) {
            if (d.at(i, j) == 0)
                continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = j;
            }
        }
    return found;
}

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    SmithDecomposition out{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& u = out.u_mat;
    IntMatrix& d = out.d_mat;
    IntMatrix& v = out.v_mat;

    auto move_pivot = [&](int s) {
        int pr = 0, pc = 0;
        if (!find_pivot(d, s, pr, pc))
            return false;
        d.swap_rows(s, pr);
        u.swap_rows(s, pr);
        d.swap_cols(s, pc);
        v.swap_cols(s, pc);
        return true;
    };
    // one round of row/column reduction against the pivot; truncated
    // quotients leave remainders strictly smaller than the pivot
    auto reduce_cross = [&](int s) {
        for (int i = s + 1; i < rows; ++i) {
            if (d.at(i, s) == 0)
                continue;
            Int q = d.at(i, s) / d.at(s, s);
            if (q != 0) {
                d.add_row_multiple(i, s, -q);
                u.add_row_multiple(i, s, -q);
            }
        }
        for (int j = s + 1; j < cols; ++j) {
            if (d.at(s, j) == 0)
                continue;
            Int q = d.at(s, j) / d.at(s, s);
            if (q != 0) {
                d.add_col_multiple(j, s, -q);
                v.add_col_multiple(j, s, -q);
            }
        }
    };
    auto clear_cross = [&](int s) {
        while (!is_lone_pivot(d, s)) {
            reduce_cross(s);
            if (!is_lone_pivot(d, s) && !move_pivot(s))
                break;
        }
    };

    const int steps = rows < cols ? rows : cols;
    for (int s = 0; s < steps; ++s) {
        if (!move_pivot(s))
            break; // remaining block is zero
        clear_cross(s);

        // the pivot must divide every entry of the trailing block
        bool retry = true;
        while (retry) {
            retry = false;
            for (int i = s + 1; i < rows && !retry; ++i)
                for (int j = s + 1; j < cols && !retry; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        d.add_row_multiple(s, i, 1);
                        u.add_row_multiple(s, i, 1);
                        retry = true;
                    }
            if (retry)
                clear_cross(s);
        }
    }

    // nonnegative diagonal, sign absorbed into u
    for (int i = 0; i < steps; ++i)
        if (d.at(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    return out;
}

IntMatrix symmetrize(const IntMatrix& c) {
    if (!c.is_square())
        throw NonSquareError("symmetrize requires a square matrix");
    return c + c.transposed();
}

EvenForm::EvenForm(IntMatrix m, Int det, int signature)
    : mat_(std::move(m)), det_(std::move(det)), signature_(signature) {}

EvenForm check_even_symmetric_nondegenerate(const IntMatrix& m) {
    if (!m.is_square() || !m.is_symmetric())
        throw NonSymmetricError("even form must be square and symmetric");
    for (int i = 0; i < m.rows(); ++i)
        if (m.at(i, i) % 2 != 0)
            throw NotEvenError(i);
    Int det = determinant(m);
    if (det == 0)
        throw DegenerateError("even form must be nondegenerate");
    int sig = signature(m);
    return EvenForm(m, det, sig);
}

bool is_unimodular(const IntMatrix& m) {
    if (!m.is_square())
        return false;
    Int d = determinant(m);
    return d == 1 || d == -1;
}

IntMatrix integer_inverse(const IntMatrix& m) {
    if (!is_unimodular(m))
        throw NotUnimodularError("integer inverse requires a unimodular matrix");
    RationalMatrix inv = rational_inverse(m);
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& e = inv.at(i, j);
            if (e.get_den() != 1)
                throw InternalCheckError("inverse of unimodular matrix not integral");
            out.at(i, j) = e.get_num();
        }
    return out;
}

} // namespace linkinv
