#include "linkinv/invariants.hpp"

#include "linkinv/errors.hpp"

namespace linkinv {

PhaseRational twist(const GroupPresentation& g, const GroupElement& u) {
    return g.quadratic(u);
}

PhaseRational s_matrix(const GroupPresentation& g, const GroupElement& u,
                       const GroupElement& v) {
    if (!g.quadratic_allowed())
        throw NotEvenError("S-matrix requires an even presentation");
    return PhaseRational::mod2(2 * g.pairing_raw(u, v));
}

PhaseRational braiding(const GroupPresentation& g, const GroupElement& u,
                       const GroupElement& v) {
    if (!g.quadratic_allowed())
        throw NotEvenError("braiding requires an even presentation");
    g.validate(u);
    g.validate(v);
    const size_t r = g.invariant_factors().size();
    PhaseRational acc;
    for (size_t i = 0; i < r; ++i) {
        Int e = u.coords[i] * v.coords[i];
        if (e != 0)
            acc = acc.plus(g.quadratic(g.generator(static_cast<int>(i))).times(e));
    }
    for (size_t k = 0; k < r; ++k)
        for (size_t l = k + 1; l < r; ++l) {
            Int e = u.coords[k] * v.coords[l];
            if (e == 0)
                continue;
            PhaseRational s = s_matrix(g, g.generator(static_cast<int>(k)),
                                       g.generator(static_cast<int>(l)));
            acc = acc.plus(s.times(e));
        }
    return acc;
}

GaussSum delta(const GroupPresentation& g) {
    if (!g.quadratic_allowed())
        throw NotEvenError("delta requires an even presentation");
    GaussSum sum;
    for (const GroupElement& u : g.elements())
        sum.add_term(g.quadratic(u).negated());
    return sum;
}

Int global_dimension_radicand(const GroupPresentation& g) { return g.order(); }

namespace {

// Tuple odometer over index vectors in [0, size)^copies, last slot fastest.
bool advance(std::vector<int>& idx, int size) {
    for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
        if (++idx[pos] < size)
            return true;
        idx[pos] = 0;
    }
    return false;
}

void check_budget(const Int& group_order, int copies, long budget) {
    if (budget <= 0)
        throw BudgetExceededError("term budget must be positive");
    Int count;
    mpz_pow_ui(count.get_mpz_t(), group_order.get_mpz_t(), static_cast<unsigned long>(copies));
    if (count > budget)
        throw BudgetExceededError("enumeration of " + count.get_str() +
                                  " terms exceeds budget " + std::to_string(budget));
}

} // namespace

GaussSum quadratic_phase_sum(const IntMatrix& form, const GroupPresentation& g,
                             int copies, int sign, long budget) {
    if (!form.is_square() || !form.is_symmetric())
        throw NonSymmetricError("phase sum form must be symmetric");
    for (int i = 0; i < form.rows(); ++i)
        if (form.at(i, i) % 2 != 0)
            throw NotEvenError(i);
    if (!g.quadratic_allowed())
        throw NotEvenError("phase sum requires an even presentation");
    if (form.rows() != copies)
        throw SizeMismatchError("tuple length does not match form size");
    check_budget(g.order(), copies, budget);

    const std::vector<GroupElement> els = g.elements();
    const int n = static_cast<int>(els.size());

    // per-element quadratic values and, when affordable, the pairing table
    std::vector<Rat> qraw(n);
    std::vector<PhaseRational> theta(n);
    for (int i = 0; i < n; ++i) {
        qraw[i] = g.quadratic_raw(els[i]);
        theta[i] = PhaseRational::mod2(qraw[i]);
    }
    const bool dense = static_cast<long>(n) * n <= 4'000'000;
    std::vector<Rat> ptable;
    if (dense) {
        ptable.resize(static_cast<size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rat v = g.pairing_raw(els[i], els[j]);
                ptable[static_cast<size_t>(i) * n + j] = v;
                ptable[static_cast<size_t>(j) * n + i] = v;
            }
    }
    auto praw = [&](int i, int j) -> Rat {
        if (dense)
            return ptable[static_cast<size_t>(i) * n + j];
        return g.pairing_raw(els[i], els[j]);
    };

    GaussSum accumulated; // single rational accumulation, reduced once
    GaussSum composed;    // product of reduced twist/S-matrix powers
    std::vector<int> idx(static_cast<size_t>(copies), 0);
    do {
        Rat acc = 0;
        PhaseRational comp;
        for (int a = 0; a < copies; ++a) {
            const Int& faa = form.at(a, a);
            if (faa != 0) {
                acc += Rat(faa) * qraw[idx[a]];
                comp = comp.plus(theta[idx[a]].times(faa));
            }
            for (int b = a + 1; b < copies; ++b) {
                const Int& fab = form.at(a, b);
                if (fab == 0)
                    continue;
                Rat p = praw(idx[a], idx[b]);
                acc += Rat(2 * fab) * p;
                comp = comp.plus(PhaseRational::mod2(2 * p).times(fab));
            }
        }
        PhaseRational reduced = PhaseRational::mod2(sign < 0 ? Rat(-acc) : acc);
        if (sign < 0)
            comp = comp.negated();
        if (!(reduced == comp))
            throw InternalCheckError("twist/S-matrix route disagrees with direct evaluation");
        accumulated.add_term(reduced);
        composed.add_term(comp);
    } while (advance(idx, n));

    if (!(accumulated == composed))
        throw InternalCheckError("phase sum routes produced different Gauss sums");
    return accumulated;
}

GaussSum partition_function(const IntMatrix& c, const EvenForm& l, long budget) {
    IntMatrix k = symmetrize(c); // NonSquare on non-square input
    GroupPresentation g = GroupPresentation::cokernel(l);
    return quadratic_phase_sum(k, g, c.rows(), -1, budget);
}

InvariantValue rt_invariant(const EvenForm& k, const EvenForm& l, long budget) {
    GroupPresentation g = GroupPresentation::cokernel(k);
    GaussSum sum = quadratic_phase_sum(l.matrix(), g, l.size(), +1, budget);
    long sig_product = static_cast<long>(k.signature()) * l.signature();
    PhaseRational front_phase = PhaseRational::mod2(Rat(-sig_product, 4));
    SurdMagnitude magnitude = SurdMagnitude::half_power(k.abs_det(), -l.size());
    return InvariantValue(std::move(sum), front_phase, magnitude);
}

ReciprocityReport reciprocity_check(const EvenForm& k, const EvenForm& l, long budget) {
    ReciprocityReport report;
    GroupPresentation gl = GroupPresentation::cokernel(l);
    report.lhs = quadratic_phase_sum(k.matrix(), gl, k.size(), -1, budget);

    GroupPresentation gk = GroupPresentation::cokernel(k);
    GaussSum rhs_sum = quadratic_phase_sum(l.matrix(), gk, l.size(), +1, budget);
    long sig_product = static_cast<long>(k.signature()) * l.signature();
    PhaseRational front_phase = PhaseRational::mod2(Rat(-sig_product, 4));
    SurdMagnitude magnitude = SurdMagnitude::half_power(l.abs_det(), k.size())
                                  .times(SurdMagnitude::half_power(k.abs_det(), -l.size()));
    report.rhs = InvariantValue(std::move(rhs_sum), front_phase, magnitude);

    mpz_pow_ui(report.lhs_tuples.get_mpz_t(), l.abs_det().get_mpz_t(),
               static_cast<unsigned long>(k.size()));
    mpz_pow_ui(report.rhs_tuples.get_mpz_t(), k.abs_det().get_mpz_t(),
               static_cast<unsigned long>(l.size()));
    report.residual = std::abs(report.lhs.evaluate() - report.rhs.float_view());
    return report;
}

IntMatrix half_coupling(const EvenForm& k) {
    const int n = k.size();
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
        c.at(i, i) = k.matrix().at(i, i) / 2;
        for (int j = 0; j < i; ++j)
            c.at(i, j) = k.matrix().at(i, j);
    }
    return c;
}

DualityReport duality_check(const IntMatrix& c, const EvenForm& l, long budget) {
    EvenForm k = check_even_symmetric_nondegenerate(symmetrize(c));
    DualityReport report;
    report.z = partition_function(c, l, budget);
    report.z_dual = partition_function(half_coupling(l), k, budget);
    report.rt_kl = rt_invariant(k, l, budget);
    report.rt_lk = rt_invariant(l, k, budget);

    const int n = c.rows();
    const int m = l.size();
    std::complex<double> z = report.z.evaluate();
    std::complex<double> kl_scaled =
        SurdMagnitude::half_power(l.abs_det(), n).to_double() * report.rt_kl.float_view();
    std::complex<double> lk_scaled =
        SurdMagnitude::half_power(k.abs_det(), m).to_double() * report.rt_lk.float_view();
    report.residual_kl = std::abs(z - kl_scaled);
    report.residual_lk = std::abs(z - lk_scaled);
    report.residual_dual = std::abs(report.z_dual.evaluate() - lk_scaled);

    Int za, ka;
    mpz_pow_ui(za.get_mpz_t(), l.abs_det().get_mpz_t(), static_cast<unsigned long>(n));
    mpz_pow_ui(ka.get_mpz_t(), k.abs_det().get_mpz_t(), static_cast<unsigned long>(m));
    report.term_total = 2 * za + 2 * ka;
    return report;
}

LensReport lens_example(long k, long p) {
    if (k < 1 || p < 1)
        throw Error("lens example requires k >= 1 and p >= 1");
    LensReport report;
    report.k = k;
    report.p = p;

    for (long a1 = 0; a1 < p; ++a1)
        for (long a2 = 0; a2 < p; ++a2) {
            Rat t(-2 * k * (a1 * a1 + a1 * a2 + a2 * a2), p);
            t.canonicalize();
            report.z.add_term(PhaseRational::mod2(t));
        }

    GaussSum rt_sum;
    for (long u1 = 0; u1 < k; ++u1)
        for (long u2 = 0; u2 < 3 * k; ++u2) {
            Rat t(2 * p * (3 * u1 * u1 + 3 * u1 * u2 + u2 * u2), 3 * k);
            t.canonicalize();
            rt_sum.add_term(PhaseRational::mod2(t));
        }
    // front factor -i / sqrt(3 k^2)
    PhaseRational front_phase = PhaseRational::mod2(Rat(-1, 2));
    SurdMagnitude magnitude = SurdMagnitude::half_power(Int(3) * k * k, -1);
    report.rt = InvariantValue(std::move(rt_sum), front_phase, magnitude);

    report.z_value = report.z.evaluate();
    report.rt_value = report.rt.float_view();
    report.residual = std::abs(report.z_value - static_cast<double>(p) * report.rt_value);
    return report;
}

} // namespace linkinv
