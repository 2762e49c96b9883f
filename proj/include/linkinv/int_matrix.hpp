#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace linkinv {

using Int = mpz_class;
using Rat = mpq_class;

// Dense matrix of arbitrary-precision integers, row-major. All arithmetic is
// exact; nothing in this type ever rounds.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols);
    // Convenience for literals in tests and fixtures.
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Int& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix negated() const;
    // Block-diagonal direct sum (this in the upper-left corner).
    IntMatrix direct_sum(const IntMatrix& rhs) const;

    bool operator==(const IntMatrix& rhs) const = default;

    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row_multiple(int dst, int src, const Int& factor);
    void add_col_multiple(int dst, int src, const Int& factor);
    void negate_row(int i);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

// Dense matrix of exact rationals (canonical form, positive denominators).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix from_int(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Rat& at(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> entries_;
};

// Matrix text format: first line "rows cols", then one line per row with
// base-10 entries separated by single spaces. Lines starting with '#' are
// ignored. Round-trips bit-exactly through format_matrix.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_file(const std::string& path);
std::string format_matrix(const IntMatrix& m);

} // namespace linkinv
