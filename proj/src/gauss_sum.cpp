#include "linkinv/gauss_sum.hpp"

#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <vector>

#include "linkinv/errors.hpp"

namespace linkinv {

void GaussSum::add_term(const PhaseRational& phase, const Int& multiplicity) {
    if (multiplicity == 0)
        return;
    auto it = terms_.find(phase);
    if (it == terms_.end()) {
        terms_.emplace(phase, multiplicity);
        return;
    }
    it->second += multiplicity;
    if (it->second == 0)
        terms_.erase(it);
}

GaussSum& GaussSum::operator+=(const GaussSum& rhs) {
    for (const auto& [phase, mult] : rhs.terms_)
        add_term(phase, mult);
    return *this;
}

GaussSum GaussSum::operator*(const GaussSum& rhs) const {
    GaussSum out;
    for (const auto& [pa, ma] : terms_)
        for (const auto& [pb, mb] : rhs.terms_)
            out.add_term(pa.plus(pb), ma * mb);
    return out;
}

GaussSum GaussSum::conjugate() const {
    GaussSum out;
    for (const auto& [phase, mult] : terms_)
        out.add_term(phase.negated(), mult);
    return out;
}

GaussSum GaussSum::scaled(const Int& factor) const {
    GaussSum out;
    if (factor == 0)
        return out;
    for (const auto& [phase, mult] : terms_)
        out.add_term(phase, mult * factor);
    return out;
}

Int GaussSum::total_weight() const {
    Int w = 0;
    for (const auto& [phase, mult] : terms_)
        w += abs(mult);
    return w;
}

std::complex<double> GaussSum::evaluate() const {
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [phase, mult] : terms_)
        acc += mult.get_d() * phase.unit();
    return acc;
}

namespace {

using Poly = std::vector<Int>; // coefficient of x^i at index i

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Exact division of polynomials over Z; the divisor must be monic here
// (cyclotomic polynomials are), so every step stays integral.
Poly poly_divide_exact(const Poly& num, const Poly& den) {
    Poly rem = num;
    Poly quot(num.size(), Int(0));
    while (rem.size() >= den.size()) {
        size_t shift = rem.size() - den.size();
        Int lead = rem.back();
        quot[shift] = lead;
        for (size_t i = 0; i < den.size(); ++i)
            rem[shift + i] -= lead * den[i];
        poly_trim(rem);
        if (rem.empty())
            break;
    }
    if (!rem.empty())
        throw InternalCheckError("non-exact polynomial division");
    poly_trim(quot);
    return quot;
}

// Remainder of p modulo the monic divisor d.
Poly poly_mod(Poly p, const Poly& d) {
    poly_trim(p);
    while (p.size() >= d.size()) {
        size_t shift = p.size() - d.size();
        Int lead = p.back();
        for (size_t i = 0; i < d.size(); ++i)
            p[shift + i] -= lead * d[i];
        poly_trim(p);
    }
    return p;
}

const Poly& cyclotomic(unsigned long n) {
    static std::map<unsigned long, Poly> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    Poly phi;
    if (n == 1) {
        phi = {Int(-1), Int(1)}; // x - 1
    } else {
        Poly p(n + 1, Int(0)); // x^n - 1
        p[0] = -1;
        p[n] = 1;
        for (unsigned long d = 1; d < n; ++d)
            if (n % d == 0)
                p = poly_divide_exact(p, cyclotomic(d));
        phi = p;
    }
    return cache.emplace(n, std::move(phi)).first->second;
}

} // namespace

bool GaussSum::is_zero_exact() const {
    if (terms_.empty())
        return true;
    Int dlcm = 1;
    for (const auto& [phase, mult] : terms_)
        mpz_lcm(dlcm.get_mpz_t(), dlcm.get_mpz_t(), phase.value().get_den().get_mpz_t());
    if (!dlcm.fits_ulong_p())
        throw Error("exponent denominators too large for exact zero test");
    unsigned long d = dlcm.get_ui();
    unsigned long n = 2 * d; // the phases are powers of zeta_n = e^{i*pi/d}
    Poly coeffs(n, Int(0));
    for (const auto& [phase, mult] : terms_) {
        Int idx = phase.value().get_num() * (Int(d) / phase.value().get_den());
        coeffs[idx.get_ui()] += mult;
    }
    Poly rem = poly_mod(std::move(coeffs), cyclotomic(n));
    return rem.empty();
}

bool GaussSum::equals_integer_exact(const Int& value) const {
    GaussSum diff = *this;
    diff.add_term(PhaseRational(), -value);
    return diff.is_zero_exact();
}

std::string GaussSum::serialize() const {
    std::ostringstream out;
    out << "terms=" << terms_.size() << '\n';
    for (const auto& [phase, mult] : terms_)
        out << phase.str() << ' ' << mult.get_str() << '\n';
    return out.str();
}

GaussSum GaussSum::parse(std::istream& in) {
    std::string line;
    long lineno = 0;
    if (!std::getline(in, line))
        throw ParseError("missing 'terms=' header", lineno);
    ++lineno;
    if (line.rfind("terms=", 0) != 0)
        throw ParseError("expected 'terms=<count>'", lineno);
    long count = 0;
    try {
        count = std::stol(line.substr(6));
    } catch (const std::exception&) {
        throw ParseError("bad term count", lineno);
    }
    GaussSum out;
    for (long i = 0; i < count; ++i) {
        if (!std::getline(in, line))
            throw ParseError("unexpected end of term list", lineno);
        ++lineno;
        std::istringstream ls(line);
        std::string frac, mult;
        if (!(ls >> frac >> mult))
            throw ParseError("expected 'num/den multiplicity'", lineno);
        size_t slash = frac.find('/');
        if (slash == std::string::npos)
            throw ParseError("exponent must be 'num/den'", lineno);
        try {
            Rat t(Int(frac.substr(0, slash)), Int(frac.substr(slash + 1)));
            t.canonicalize();
            out.add_term(PhaseRational::mod2(t), Int(mult));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational or multiplicity", lineno);
        }
    }
    return out;
}

SurdMagnitude SurdMagnitude::half_power(const Int& base, long power) {
    Int b = abs(base);
    if (b == 0)
        throw DegenerateError("half_power of zero base");
    SurdMagnitude out;
    unsigned long a = static_cast<unsigned long>(power < 0 ? -power : power);
    Int whole;
    if (a % 2 == 0) {
        mpz_pow_ui(whole.get_mpz_t(), b.get_mpz_t(), a / 2);
    } else {
        mpz_pow_ui(whole.get_mpz_t(), b.get_mpz_t(), (a - 1) / 2);
        out.radicand = b;
    }
    out.rational = power >= 0 ? Rat(whole) : Rat(1, whole);
    if (power < 0 && a % 2 == 1) {
        // b^(-a/2) = sqrt(b) / b^((a+1)/2)
        out.rational /= Rat(b);
    }
    out.normalize();
    return out;
}

SurdMagnitude SurdMagnitude::times(const SurdMagnitude& rhs) const {
    SurdMagnitude out;
    out.rational = rational * rhs.rational;
    out.radicand = radicand * rhs.radicand;
    out.normalize();
    return out;
}

void SurdMagnitude::normalize() {
    if (radicand <= 0)
        throw Error("surd radicand must be positive");
    Int pulled = 1;
    for (Int p = 2; p * p <= radicand; ++p) {
        Int sq = p * p;
        while (radicand % sq == 0) {
            radicand /= sq;
            pulled *= p;
        }
    }
    rational *= Rat(pulled);
    rational.canonicalize();
}

double SurdMagnitude::to_double() const {
    return rational.get_d() * std::sqrt(radicand.get_d());
}

std::complex<double> InvariantValue::float_view() const {
    return phase_.unit() * magnitude_.to_double() * sum_.evaluate();
}

std::string InvariantValue::serialize() const {
    std::ostringstream out;
    out << "prefactor_phase=" << phase_.str() << '\n';
    out << "prefactor_rational=" << magnitude_.rational.get_num().get_str() << '/'
        << magnitude_.rational.get_den().get_str() << '\n';
    out << "prefactor_radicand=" << magnitude_.radicand.get_str() << '\n';
    out << sum_.serialize();
    return out.str();
}

} // namespace linkinv
