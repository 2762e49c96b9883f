#pragma once

#include "linkinv/gauss_sum.hpp"
#include "linkinv/torsion_group.hpp"

namespace linkinv {

inline constexpr long kDefaultTermBudget = 10'000'000;

// Twist exponent: Q_K(u) mod 2, the phase of theta_u = e^{i*pi*Q_K(u)}.
PhaseRational twist(const GroupPresentation& g, const GroupElement& u);

// S-matrix exponent: 2*Q_K(u,v) mod 2, so S_{u,v} = theta_{u+v}/(theta_u theta_v).
PhaseRational s_matrix(const GroupPresentation& g, const GroupElement& u,
                       const GroupElement& v);

// Braiding exponent from the generator decomposition:
//   prod_i theta_{g_i}^{u_i v_i} * prod_{k<l} S_{g_k,g_l}^{u_k v_l},
// coordinates taken in the generator basis.
PhaseRational braiding(const GroupPresentation& g, const GroupElement& u,
                       const GroupElement& v);

// Delta_K = sum_u e^{-i*pi*Q_K(u)}.
GaussSum delta(const GroupPresentation& g);

// |G_K|, the radicand of the global dimension D_K = sqrt(|G_K|).
Int global_dimension_radicand(const GroupPresentation& g);

// sum over tuples in g^copies of e^{sign * i*pi * (form (x) Q_g)(tuple)}.
// Computed along two independent routes (twist/S-matrix powers of reduced
// exponents, and a single rational accumulation reduced once) which must
// agree exactly; disagreement raises InternalCheckError.
GaussSum quadratic_phase_sum(const IntMatrix& form, const GroupPresentation& g,
                             int copies, int sign, long budget = kDefaultTermBudget);

// Partition function: K = c + c^T, summed over (Z^m/LZ^m)^n with phases
// e^{-i*pi*(K (x) L^{-1})(X)}. Exact; |det L|^n terms aggregated.
GaussSum partition_function(const IntMatrix& c, const EvenForm& l,
                            long budget = kDefaultTermBudget);

// RT_K(L) = e^{-i*pi*sigma(K)sigma(L)/4} |det K|^{-m/2}
//           * sum over (G_K)^m of e^{i*pi*(L (x) Q_K)(U)}.
InvariantValue rt_invariant(const EvenForm& k, const EvenForm& l,
                            long budget = kDefaultTermBudget);

struct ReciprocityReport {
    GaussSum lhs;        // sum over (Z^m/LZ^m)^n, e^{-i*pi*(K (x) L^{-1})(X)}
    InvariantValue rhs;  // front factor times sum over (Z^n/KZ^n)^m
    Int lhs_tuples;
    Int rhs_tuples;
    double residual; // |lhs - rhs| in the float view
};

ReciprocityReport reciprocity_check(const EvenForm& k, const EvenForm& l,
                                    long budget = kDefaultTermBudget);

struct DualityReport {
    GaussSum z;           // partition function of c over Q_L
    GaussSum z_dual;      // partition function of the dual coupling over Q_K
    InvariantValue rt_kl; // RT_K(L)
    InvariantValue rt_lk; // RT_L(K)
    double residual_kl;   // |Z - |det L|^{n/2} RT_K(L)|
    double residual_lk;   // |Z - |det K|^{m/2} RT_L(K)|, the chained form
    double residual_dual; // |Z_dual - |det K|^{m/2} RT_L(K)|
    Int term_total;
};

// Checks Z against |det L|^{n/2} RT_K(L), and the dual-theory partition
// function (coupling with symmetrization L, linking form Q_K) against
// |det K|^{m/2} RT_L(K). The report also carries the residual of the chained
// equality Z = |det K|^{m/2} RT_L(K); that chain fails in general (the two
// sides differ already in modulus whenever |det L|^n != |det K|^m).
DualityReport duality_check(const IntMatrix& c, const EvenForm& l,
                            long budget = kDefaultTermBudget);

// A coupling whose symmetrization is the given even form: half the diagonal
// plus the strict lower triangle.
IntMatrix half_coupling(const EvenForm& k);

// The closed-form lens-space family: coupling block [[k,k],[0,k]] on L(p,1).
// Evaluates the two displayed sums exactly as written and checks Z = p * RT.
struct LensReport {
    long k = 0;
    long p = 0;
    GaussSum z;
    InvariantValue rt;
    std::complex<double> z_value;
    std::complex<double> rt_value;
    double residual; // |Z - p * RT|
};

LensReport lens_example(long k, long p);

} // namespace linkinv
