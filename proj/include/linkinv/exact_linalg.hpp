#pragma once

#include "linkinv/int_matrix.hpp"

namespace linkinv {

// Exact determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& m);

// Signature (positive minus negative inertia indices) of a symmetric
// nondegenerate integer matrix, computed by congruent diagonalization over
// exact rationals. Zero diagonal pivots are repaired by a symmetric
// row/column addition, so hyperbolic blocks need no special casing.
int signature(const IntMatrix& m);

// Exact inverse of a nondegenerate square integer matrix.
RationalMatrix rational_inverse(const IntMatrix& m);

// u_mat * source * v_mat = d_mat, with u_mat and v_mat unimodular and d_mat
// diagonal, nonnegative, each entry dividing the next.
struct SmithDecomposition {
    IntMatrix u_mat;
    IntMatrix d_mat;
    IntMatrix v_mat;
};

// Deterministic Smith normal form: pivot of smallest nonzero absolute value,
// ties broken by lowest (row, col).
SmithDecomposition smith_normal_form(const IntMatrix& m);

// c + c^T; symmetric with even diagonal by construction.
IntMatrix symmetrize(const IntMatrix& c);

// A square symmetric integer matrix with even diagonal and nonzero
// determinant, validated on construction. The quadratic-form machinery only
// accepts matrices through this type.
class EvenForm {
public:
    const IntMatrix& matrix() const { return mat_; }
    const Int& det() const { return det_; }
    Int abs_det() const { return abs(det_); }
    int size() const { return mat_.rows(); }
    int signature() const { return signature_; }

    bool operator==(const EvenForm& rhs) const { return mat_ == rhs.mat_; }

private:
    friend EvenForm check_even_symmetric_nondegenerate(const IntMatrix&);
    EvenForm(IntMatrix m, Int det, int signature);

    IntMatrix mat_;
    Int det_;
    int signature_;
};

// Throws NonSymmetricError, NotEvenError (with the first offending diagonal
// index) or DegenerateError.
EvenForm check_even_symmetric_nondegenerate(const IntMatrix& m);

bool is_unimodular(const IntMatrix& m);

// Exact integer inverse of a unimodular matrix.
IntMatrix integer_inverse(const IntMatrix& m);

} // namespace linkinv
