#pragma once

#include <complex>
#include <string>

#include "linkinv/int_matrix.hpp"

namespace linkinv {

// An exact rational exponent t, reduced into [0, 2), denoting the unit phase
// e^{i*pi*t}. Pairing values (defined mod 1) are stored reduced into [0, 1),
// which is a subset of the same normalization.
class PhaseRational {
public:
    PhaseRational() : value_(0) {}

    static PhaseRational mod2(const Rat& t);
    static PhaseRational mod1(const Rat& t);

    const Rat& value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    // (-t) mod 2
    PhaseRational negated() const { return mod2(-value_); }
    // (t + u) mod 2
    PhaseRational plus(const PhaseRational& rhs) const { return mod2(value_ + rhs.value_); }
    // (n * t) mod 2
    PhaseRational times(const Int& n) const { return mod2(Rat(n) * value_); }

    std::complex<double> unit() const;

    // "numerator/denominator", denominator always printed
    std::string str() const;

    bool operator==(const PhaseRational& rhs) const { return value_ == rhs.value_; }
    bool operator<(const PhaseRational& rhs) const { return value_ < rhs.value_; }

private:
    explicit PhaseRational(Rat v) : value_(std::move(v)) {}
    Rat value_;
};

// t reduced into [0, modulus) for integer modulus >= 1.
Rat reduce_mod(const Rat& t, unsigned long modulus);

} // namespace linkinv
