#pragma once

#include <stdexcept>
#include <string>

namespace linkinv {

// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonSquareError : public Error {
public:
    using Error::Error;
};

class NonSymmetricError : public Error {
public:
    using Error::Error;
};

class DegenerateError : public Error {
public:
    using Error::Error;
};

// Raised when an even symmetric matrix is required but a diagonal entry is
// odd. Carries the first offending diagonal index.
class NotEvenError : public Error {
public:
    explicit NotEvenError(int diagonal_index)
        : Error("NotEven: diagonal index " + std::to_string(diagonal_index) +
                " is odd"),
          index_(diagonal_index) {}
    explicit NotEvenError(const std::string& what) : Error(what), index_(-1) {}
    int diagonal_index() const { return index_; }

private:
    int index_;
};

class ElementMismatchError : public Error {
public:
    using Error::Error;
};

class SizeMismatchError : public Error {
public:
    using Error::Error;
};

class NotUnimodularError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, long line)
        : Error("parse error, line " + std::to_string(line) + ": " + what),
          line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// Two independent evaluation routes disagreed; indicates a library bug.
class InternalCheckError : public Error {
public:
    using Error::Error;
};

} // namespace linkinv
