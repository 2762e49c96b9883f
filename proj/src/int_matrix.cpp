#include "linkinv/int_matrix.hpp"

#include <fstream>
#include <sstream>
#include <utility>

#include "linkinv/errors.hpp"

namespace linkinv {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
        throw Error("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows <= 0 || cols <= 0)
        throw Error("matrix dimensions must be positive");
    if (entries_.size() != static_cast<size_t>(rows) * cols)
        throw Error("entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::zero(int rows, int cols) { return IntMatrix(rows, cols); }

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw Error("ragged row in matrix literal");
        int j = 0;
        for (long v : row)
            m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw SizeMismatchError("matrix product size mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw SizeMismatchError("matrix sum size mismatch");
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + rhs.entries_[k];
    return out;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix out(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = -entries_[k];
    return out;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& rhs) const {
    IntMatrix out(rows_ + rhs.rows_, cols_ + rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j);
    for (int i = 0; i < rhs.rows_; ++i)
        for (int j = 0; j < rhs.cols_; ++j)
            out.at(rows_ + i, cols_ + j) = rhs.at(i, j);
    return out;
}

void IntMatrix::swap_rows(int a, int b) {
    if (a == b)
        return;
    for (int j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
    if (a == b)
        return;
    for (int i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& factor) {
    for (int j = 0; j < cols_; ++j)
        at(dst, j) += factor * at(src, j);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& factor) {
    for (int i = 0; i < rows_; ++i)
        at(i, dst) += factor * at(i, src);
}

void IntMatrix::negate_row(int i) {
    for (int j = 0; j < cols_; ++j)
        at(i, j) = -at(i, j);
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows <= 0 || cols <= 0)
        throw Error("matrix dimensions must be positive");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_int(const IntMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.at(i, j) = m.at(i, j);
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_)
        throw SizeMismatchError("matrix product size mismatch");
    RationalMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0)
                continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

IntMatrix parse_matrix(std::istream& in) {
    std::string line;
    long lineno = 0;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos)
                continue;
            if (line[pos] == '#')
                continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header))
        throw ParseError("missing header line 'rows cols'", lineno);
    std::istringstream hs(header);
    long rows = 0, cols = 0;
    if (!(hs >> rows >> cols) || rows <= 0 || cols <= 0)
        throw ParseError("bad header, expected 'rows cols'", lineno);
    std::string extra;
    if (hs >> extra)
        throw ParseError("trailing tokens after 'rows cols'", lineno);

    IntMatrix m(static_cast<int>(rows), static_cast<int>(cols));
    for (long i = 0; i < rows; ++i) {
        std::string row;
        if (!next_content_line(row))
            throw ParseError("expected " + std::to_string(rows) + " rows, got " +
                                 std::to_string(i),
                             lineno);
        std::istringstream rs(row);
        for (long j = 0; j < cols; ++j) {
            std::string tok;
            if (!(rs >> tok))
                throw ParseError("row has fewer than " + std::to_string(cols) +
                                     " entries",
                                 lineno);
            try {
                m.at(static_cast<int>(i), static_cast<int>(j)) = Int(tok);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad integer '" + tok + "'", lineno);
            }
        }
        if (rs >> extra)
            throw ParseError("row has more than " + std::to_string(cols) +
                                 " entries",
                             lineno);
    }
    return m;
}

IntMatrix parse_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open matrix file: " + path);
    try {
        return parse_matrix(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), e.line());
    }
}

std::string format_matrix(const IntMatrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j)
                out << ' ';
            out << m.at(i, j).get_str();
        }
        out << '\n';
    }
    return out.str();
}

} // namespace linkinv
