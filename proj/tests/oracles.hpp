#pragma once

// Brute-force reference evaluations, independent of the library's cokernel
// and Gauss-sum machinery. Cosets of Z^m/LZ^m are enumerated by running x
// over the full box [0, |det L|)^m: since |det L| * Z^m is contained in
// L Z^m, every coset is hit the same number of times (box size / |det L|),
// so sums over the box divide out to sums over the group.

#include <complex>
#include <cstdlib>
#include <vector>

#include "linkinv/exact_linalg.hpp"
#include "linkinv/int_matrix.hpp"

namespace oracle {

using linkinv::Int;
using linkinv::IntMatrix;
using linkinv::Rat;
using linkinv::RationalMatrix;

inline std::complex<double> phase(const Rat& t) {
    double v = t.get_d();
    return {std::cos(M_PI * v), std::sin(M_PI * v)};
}

// sum over tuples X in ((Z^m/LZ^m))^copies of e^{sign*i*pi*(form (x) L^{-1})(X)},
// fully by brute force over the covering box.
inline std::complex<double> quadratic_phase_sum(const IntMatrix& form, const IntMatrix& l,
                                                int copies, int sign) {
    const int m = l.rows();
    RationalMatrix linv = linkinv::rational_inverse(l);
    long d = std::labs(static_cast<long>(linkinv::determinant(l).get_si()));

    // all box vectors of Z_d^m
    long box = 1;
    for (int i = 0; i < m; ++i)
        box *= d;
    std::vector<std::vector<long>> vectors;
    vectors.reserve(box);
    for (long code = 0; code < box; ++code) {
        long rest = code;
        std::vector<long> v(m);
        for (int i = m - 1; i >= 0; --i) {
            v[i] = rest % d;
            rest /= d;
        }
        vectors.push_back(std::move(v));
    }

    auto pair_value = [&](const std::vector<long>& a, const std::vector<long>& b) {
        Rat acc = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (a[i] != 0 && b[j] != 0)
                    acc += Rat(a[i]) * linv.at(i, j) * Rat(b[j]);
        return acc;
    };

    // tuples over vector indices
    std::complex<double> total{0.0, 0.0};
    std::vector<long> idx(copies, 0);
    while (true) {
        Rat acc = 0;
        for (int a = 0; a < copies; ++a)
            for (int b = 0; b < copies; ++b)
                if (form.at(a, b) != 0)
                    acc += Rat(form.at(a, b)) * pair_value(vectors[idx[a]], vectors[idx[b]]);
        total += phase(sign < 0 ? Rat(-acc) : acc);
        int pos = copies - 1;
        while (pos >= 0 && ++idx[pos] == box)
            idx[pos--] = 0;
        if (pos < 0)
            break;
    }
    // every coset tuple counted (box/d)^copies times
    double overcount = 1.0;
    for (int a = 0; a < copies; ++a)
        overcount *= static_cast<double>(box) / static_cast<double>(d);
    return total / overcount;
}

inline std::complex<double> partition(const IntMatrix& c, const IntMatrix& l) {
    return quadratic_phase_sum(linkinv::symmetrize(c), l, c.rows(), -1);
}

inline std::complex<double> rt(const IntMatrix& k, const IntMatrix& l) {
    std::complex<double> sum = quadratic_phase_sum(l, k, l.rows(), +1);
    double det_k = std::abs(linkinv::determinant(k).get_d());
    int sig = linkinv::signature(k) * linkinv::signature(l);
    std::complex<double> front =
        std::exp(std::complex<double>(0.0, -M_PI * sig / 4.0)) *
        std::pow(det_k, -l.rows() / 2.0);
    return front * sum;
}

// Signature by Jacobi's leading-principal-minor rule; valid when every
// leading minor is nonzero.
inline int signature_by_minors(const IntMatrix& m) {
    int sig = 0;
    Int prev = 1;
    for (int k = 1; k <= m.rows(); ++k) {
        IntMatrix lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                lead.at(i, j) = m.at(i, j);
        Int d = linkinv::determinant(lead);
        if (d == 0)
            throw std::runtime_error("minor oracle needs nonzero leading minors");
        sig += (sgn(d) == sgn(prev)) ? 1 : -1;
        prev = d;
    }
    return sig;
}

} // namespace oracle
