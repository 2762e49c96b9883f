#include "linkinv/phase.hpp"

#include <cmath>

namespace linkinv {

Rat reduce_mod(const Rat& t, unsigned long modulus) {
    Rat tt = t;
    tt.canonicalize(); // mpq_class(num, den) constructions need not be reduced
    Rat scaled = tt / Rat(modulus);
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    return tt - Rat(modulus) * Rat(f);
}

PhaseRational PhaseRational::mod2(const Rat& t) { return PhaseRational(reduce_mod(t, 2)); }

PhaseRational PhaseRational::mod1(const Rat& t) { return PhaseRational(reduce_mod(t, 1)); }

std::complex<double> PhaseRational::unit() const {
    double t = value_.get_d();
    return {std::cos(M_PI * t), std::sin(M_PI * t)};
}

std::string PhaseRational::str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

} // namespace linkinv
