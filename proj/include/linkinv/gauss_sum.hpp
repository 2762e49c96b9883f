#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <string>

#include "linkinv/phase.hpp"

namespace linkinv {

// Exact finite sum  sum_t m_t * e^{i*pi*t}  with integer multiplicities keyed
// by reduced phase exponents. Merging is plain integer addition, so the stored
// value never depends on evaluation order.
class GaussSum {
public:
    GaussSum() = default;

    static GaussSum one() {
        GaussSum s;
        s.add_term(PhaseRational(), 1);
        return s;
    }

    void add_term(const PhaseRational& phase, const Int& multiplicity = 1);

    GaussSum& operator+=(const GaussSum& rhs);
    // Convolution product: exponents add mod 2, multiplicities multiply.
    GaussSum operator*(const GaussSum& rhs) const;
    GaussSum conjugate() const;
    GaussSum scaled(const Int& factor) const;

    bool operator==(const GaussSum& rhs) const { return terms_ == rhs.terms_; }

    const std::map<PhaseRational, Int>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    // Total number of aggregated unit phases, sum of |m_t|.
    Int total_weight() const;

    // Deterministic: summed over keys in ascending order.
    std::complex<double> evaluate() const;

    // Exact decision procedures in the cyclotomic integers: the sum lies in
    // Z[zeta_N] for N = 2 * lcm of exponent denominators, and vanishes iff its
    // coefficient polynomial is divisible by the N-th cyclotomic polynomial.
    bool is_zero_exact() const;
    bool equals_integer_exact(const Int& value) const;

    // One line per term, "num/den multiplicity", ascending exponents, after a
    // header line "terms=<count>".
    std::string serialize() const;
    static GaussSum parse(std::istream& in);

private:
    std::map<PhaseRational, Int> terms_;
};

// Exact positive magnitude  rational * sqrt(radicand)  with the radicand kept
// squarefree so the representation is canonical.
struct SurdMagnitude {
    Rat rational = 1;
    Int radicand = 1;

    // |base|^(power/2) for nonzero base, as an exact surd.
    static SurdMagnitude half_power(const Int& base, long power);

    SurdMagnitude times(const SurdMagnitude& rhs) const;
    void normalize();
    double to_double() const;
    bool operator==(const SurdMagnitude& rhs) const = default;
};

// A Gauss sum scaled by an exact prefactor: phase e^{i*pi*prefactor_phase}
// times a positive surd magnitude.
class InvariantValue {
public:
    InvariantValue() = default;
    InvariantValue(GaussSum sum, PhaseRational prefactor_phase, SurdMagnitude magnitude)
        : sum_(std::move(sum)), phase_(std::move(prefactor_phase)), magnitude_(std::move(magnitude)) {}

    const GaussSum& sum() const { return sum_; }
    const PhaseRational& prefactor_phase() const { return phase_; }
    const SurdMagnitude& magnitude() const { return magnitude_; }

    std::complex<double> float_view() const;

    bool operator==(const InvariantValue& rhs) const {
        return sum_ == rhs.sum_ && phase_ == rhs.phase_ && magnitude_ == rhs.magnitude_;
    }

    // GaussSum serialization plus prefactor_phase=, prefactor_rational=,
    // prefactor_radicand= lines.
    std::string serialize() const;

private:
    GaussSum sum_;
    PhaseRational phase_;
    SurdMagnitude magnitude_;
};

} // namespace linkinv
