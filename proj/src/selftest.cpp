#include "linkinv/selftest.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "linkinv/errors.hpp"
#include "linkinv/invariants.hpp"
#include "linkinv/moves.hpp"
#include "linkinv/random_gen.hpp"

namespace linkinv {

namespace {

// Even nondegenerate forms whose cokernels cover the exhaustive checks
// (orders up to 24) plus larger determinants for Gauss-Milgram.
std::vector<IntMatrix> even_form_pool() {
    std::vector<IntMatrix> pool;
    pool.push_back(IntMatrix::from_rows({{2}}));
    pool.push_back(IntMatrix::from_rows({{4}}));
    pool.push_back(IntMatrix::from_rows({{6}}));
    pool.push_back(IntMatrix::from_rows({{8}}));
    pool.push_back(IntMatrix::from_rows({{24}}));
    pool.push_back(IntMatrix::from_rows({{-2}}));
    pool.push_back(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    pool.push_back(IntMatrix::from_rows({{2, 1}, {1, 2}}));
    pool.push_back(IntMatrix::from_rows({{4, 2}, {2, 4}}));
    pool.push_back(IntMatrix::from_rows({{6, 3}, {3, 6}}));
    pool.push_back(IntMatrix::from_rows({{0, 2}, {2, 0}}));
    pool.push_back(IntMatrix::from_rows({{0, 3}, {3, 0}}));
    pool.push_back(IntMatrix::from_rows({{2, 1}, {1, 4}}));
    pool.push_back(IntMatrix::from_rows({{4, 1}, {1, 4}}));
    pool.push_back(IntMatrix::from_rows({{2, 0}, {0, 4}}));
    pool.push_back(IntMatrix::from_rows({{-2, 1}, {1, 2}}));
    pool.push_back(IntMatrix::from_rows({{2, 1, 0}, {1, 2, 0}, {0, 0, 2}}));
    pool.push_back(IntMatrix::from_rows({{8, 0}, {0, 8}}));
    pool.push_back(IntMatrix::from_rows({{0, 8}, {8, 0}}));
    pool.push_back(stabilize_block_matrix(StabilizeBlock::E8)); // det 1, signature 8
    return pool;
}

class Suite {
public:
    Suite(uint64_t seed, double tol) : rng_(seed), tol_(tol) {}

    std::vector<CheckResult> run() {
        snf_invariants();
        det_multiplicative();
        sylvester_invariance();
        inverse_exact();
        symmetrize_even();
        lift_independence();
        pairing_bilinear();
        polarization();
        pairing_nondegenerate();
        enumeration_order();
        gauss_milgram();
        twist_s_compat();
        braiding_compat();
        reciprocity_random();
        duality_random();
        rt_double_route();
        rt_factorization();
        partition_through_k();
        slide_invariance();
        stabilization_invariance();
        return std::move(results_);
    }

private:
    void record(const std::string& name, bool ok, const std::string& detail) {
        results_.push_back({name, ok, detail});
    }

    void snf_invariants() {
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(4));
            IntMatrix a = random_int_matrix(rng_, n, -6, 6);
            SmithDecomposition s = smith_normal_form(a);
            if (s.u_mat * a * s.v_mat != s.d_mat) {
                ok = false;
                detail = "u*a*v != d";
            }
            if (abs(determinant(s.u_mat)) != 1 || abs(determinant(s.v_mat)) != 1) {
                ok = false;
                detail = "transform not unimodular";
            }
            for (int i = 0; i + 1 < n && ok; ++i) {
                const Int& di = s.d_mat.at(i, i);
                const Int& dj = s.d_mat.at(i + 1, i + 1);
                if (di < 0 || (di == 0 ? dj != 0 : dj % di != 0)) {
                    ok = false;
                    detail = "divisibility chain broken";
                }
            }
        }
        record("snf-invariants", ok, ok ? "40 random matrices" : detail);
    }

    void det_multiplicative() {
        bool ok = true;
        for (int trial = 0; trial < 40 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(4));
            IntMatrix a = random_int_matrix(rng_, n, -5, 5);
            IntMatrix b = random_int_matrix(rng_, n, -5, 5);
            ok = determinant(a * b) == determinant(a) * determinant(b);
        }
        record("det-multiplicative", ok, "40 random products");
    }

    void sylvester_invariance() {
        bool ok = true;
        for (int trial = 0; trial < 30 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(3));
            IntMatrix m = random_even_form(rng_, n, 64);
            IntMatrix p = random_unimodular(rng_, n);
            ok = signature(p.transposed() * m * p) == signature(m);
        }
        record("sylvester-invariance", ok, "30 random congruences");
    }

    void inverse_exact() {
        bool ok = true;
        for (int trial = 0; trial < 30 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(4));
            IntMatrix m = random_int_matrix(rng_, n, -6, 6);
            if (determinant(m) == 0)
                continue;
            ok = rational_inverse(m) * RationalMatrix::from_int(m) ==
                 RationalMatrix::identity(n);
        }
        record("inverse-exact", ok, "30 random inverses");
    }

    void symmetrize_even() {
        bool ok = true;
        for (int trial = 0; trial < 30 && ok; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(4));
            IntMatrix k = symmetrize(random_int_matrix(rng_, n, -9, 9));
            for (int i = 0; i < n; ++i)
                if (k.at(i, i) % 2 != 0)
                    ok = false;
            if (!k.is_symmetric())
                ok = false;
        }
        record("symmetrize-even", ok, "30 random couplings");
    }

    void lift_independence() {
        bool ok = true;
        std::string detail;
        for (const IntMatrix& m : even_form_pool()) {
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            for (const GroupElement& u : g.elements()) {
                for (int trial = 0; trial < 3; ++trial) {
                    std::vector<Int> shifted = u.canonical_lift;
                    for (int r = 0; r < g.source_rank(); ++r) {
                        Int w = rng_.range(-3, 3);
                        for (int s = 0; s < g.source_rank(); ++s)
                            shifted[s] += m.at(s, r) * w;
                    }
                    GroupElement v = g.element_from_lift(shifted);
                    if (!(v == u)) {
                        ok = false;
                        detail = "lift shift changed the element";
                    }
                    // evaluate the forms directly on the shifted lift
                    GroupElement forced{u.coords, shifted};
                    if (!(PhaseRational::mod1(g.pairing_raw(forced, u)) == g.pairing(u, u))) {
                        ok = false;
                        detail = "pairing not lift independent";
                    }
                    if (!(PhaseRational::mod2(g.quadratic_raw(forced)) == g.quadratic(u))) {
                        ok = false;
                        detail = "quadratic not lift independent mod 2";
                    }
                }
            }
        }
        record("lift-independence", ok, ok ? "all pool groups" : detail);
    }

    void pairing_bilinear() {
        bool ok = true;
        for (const IntMatrix& m : even_form_pool()) {
            if (abs(determinant(m)) > 12)
                continue; // keep the triple loop tame
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            auto els = g.elements();
            for (const auto& u : els)
                for (const auto& v : els)
                    for (const auto& w : els) {
                        PhaseRational lhs = g.pairing(g.add(u, v), w);
                        PhaseRational rhs =
                            PhaseRational::mod1(g.pairing(u, w).value() + g.pairing(v, w).value());
                        if (!(lhs == rhs))
                            ok = false;
                    }
        }
        record("pairing-bilinear", ok, "exhaustive triples, orders <= 12");
    }

    void polarization() {
        bool ok = true;
        for (const IntMatrix& m : even_form_pool()) {
            if (abs(determinant(m)) > 24)
                continue;
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            auto els = g.elements();
            for (const auto& u : els)
                for (const auto& v : els) {
                    PhaseRational lhs = PhaseRational::mod2(
                        g.quadratic(g.add(u, v)).value() - g.quadratic(u).value() -
                        g.quadratic(v).value());
                    PhaseRational rhs = PhaseRational::mod2(2 * g.pairing(u, v).value());
                    if (!(lhs == rhs))
                        ok = false;
                }
        }
        record("polarization", ok, "exhaustive pairs, orders <= 24");
    }

    void pairing_nondegenerate() {
        bool ok = true;
        for (const IntMatrix& m : even_form_pool()) {
            if (abs(determinant(m)) > 24)
                continue;
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            auto els = g.elements();
            for (const auto& u : els) {
                if (u == g.identity())
                    continue;
                bool hit = false;
                for (const auto& v : els)
                    if (!g.pairing(u, v).is_zero()) {
                        hit = true;
                        break;
                    }
                if (!hit)
                    ok = false;
            }
        }
        record("pairing-nondegenerate", ok, "orders <= 24");
    }

    void enumeration_order() {
        bool ok = true;
        for (const IntMatrix& m : even_form_pool()) {
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            if (Int(g.elements().size()) != abs(determinant(m)))
                ok = false;
        }
        record("enumeration-count", ok, "|enumerate| = |det|");
    }

    void gauss_milgram() {
        bool ok = true;
        std::string detail = "pool";
        double worst = 0.0;
        for (const IntMatrix& m : even_form_pool()) {
            EvenForm f = check_even_symmetric_nondegenerate(m);
            GroupPresentation g = GroupPresentation::cokernel(f);
            GaussSum d = delta(g);
            if (!(d * d.conjugate()).equals_integer_exact(f.abs_det())) {
                ok = false;
                detail = "|delta|^2 != |det|";
            }
            std::complex<double> val = d.evaluate();
            double mag = std::sqrt(f.abs_det().get_d());
            std::complex<double> expected =
                mag * std::exp(std::complex<double>(0.0, -M_PI * f.signature() / 4.0));
            worst = std::max(worst, std::abs(val - expected));
        }
        if (worst > tol_) {
            ok = false;
            detail = "phase residual " + std::to_string(worst);
        }
        std::ostringstream os;
        os << "max residual " << worst;
        record("gauss-milgram", ok, ok ? os.str() : detail);
    }

    void twist_s_compat() {
        bool ok = true;
        for (const IntMatrix& m : even_form_pool()) {
            if (abs(determinant(m)) > 24)
                continue;
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            auto els = g.elements();
            for (const auto& u : els)
                for (const auto& v : els) {
                    PhaseRational coboundary = PhaseRational::mod2(
                        twist(g, g.add(u, v)).value() - twist(g, u).value() -
                        twist(g, v).value());
                    if (!(coboundary == s_matrix(g, u, v)))
                        ok = false;
                }
        }
        record("twist-s-coboundary", ok, "exhaustive pairs, orders <= 24");
    }

    void braiding_compat() {
        bool ok = true;
        for (const IntMatrix& m : even_form_pool()) {
            if (abs(determinant(m)) > 24)
                continue;
            GroupPresentation g =
                GroupPresentation::cokernel(check_even_symmetric_nondegenerate(m));
            auto els = g.elements();
            for (const auto& u : els)
                for (const auto& v : els) {
                    PhaseRational sym = braiding(g, u, v).plus(braiding(g, v, u));
                    if (!(sym == s_matrix(g, u, v)))
                        ok = false;
                }
        }
        record("braiding-s-compat", ok, "c_uv + c_vu = S_uv, orders <= 24");
    }

    void reciprocity_random() {
        bool ok = true;
        double worst = 0.0;
        for (int trial = 0; trial < 40; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(2));
            int m = 1 + static_cast<int>(rng_.below(2));
            EvenForm k = check_even_symmetric_nondegenerate(random_even_form(rng_, n, 12));
            EvenForm l = check_even_symmetric_nondegenerate(random_even_form(rng_, m, 12));
            ReciprocityReport r = reciprocity_check(k, l);
            double bound = tol_ * (1.0 + r.lhs_tuples.get_d() + r.rhs_tuples.get_d());
            worst = std::max(worst, r.residual);
            if (r.residual > bound)
                ok = false;
        }
        std::ostringstream os;
        os << "40 pairs, max residual " << worst;
        record("reciprocity-random", ok, os.str());
    }

    void duality_random() {
        bool ok = true;
        double worst = 0.0;
        for (int trial = 0; trial < 25; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(2));
            int m = 1 + static_cast<int>(rng_.below(2));
            IntMatrix c(n, n);
            while (true) {
                c = random_int_matrix(rng_, n, -3, 3);
                Int det = determinant(symmetrize(c));
                if (det != 0 && abs(det) <= 12)
                    break;
            }
            EvenForm l = check_even_symmetric_nondegenerate(random_even_form(rng_, m, 12));
            DualityReport r = duality_check(c, l);
            double bound = tol_ * (1.0 + r.term_total.get_d());
            worst = std::max(worst, std::max(r.residual_kl, r.residual_dual));
            if (r.residual_kl > bound || r.residual_dual > bound)
                ok = false;
        }
        std::ostringstream os;
        os << "25 pairs, max residual " << worst;
        record("duality-random", ok, os.str());
    }

    void rt_double_route() {
        // quadratic_phase_sum raises InternalCheckError if the twist/S-matrix
        // route and the direct evaluation ever disagree.
        bool ok = true;
        std::string detail = "routes agree";
        try {
            for (int trial = 0; trial < 20; ++trial) {
                EvenForm k = check_even_symmetric_nondegenerate(
                    random_even_form(rng_, 1 + static_cast<int>(rng_.below(2)), 12));
                EvenForm l = check_even_symmetric_nondegenerate(
                    random_even_form(rng_, 1 + static_cast<int>(rng_.below(2)), 12));
                rt_invariant(k, l);
            }
        } catch (const InternalCheckError& e) {
            ok = false;
            detail = e.what();
        }
        record("rt-double-route", ok, detail);
    }

    void rt_factorization() {
        bool ok = true;
        double worst = 0.0;
        for (int trial = 0; trial < 15; ++trial) {
            IntMatrix k1 = random_even_form(rng_, 1, 8);
            IntMatrix k2 = random_even_form(rng_, 1 + static_cast<int>(rng_.below(2)), 8);
            EvenForm l = check_even_symmetric_nondegenerate(random_even_form(rng_, 1, 8));
            EvenForm whole = check_even_symmetric_nondegenerate(k1.direct_sum(k2));
            std::complex<double> lhs = rt_invariant(whole, l).float_view();
            std::complex<double> rhs =
                rt_invariant(check_even_symmetric_nondegenerate(k1), l).float_view() *
                rt_invariant(check_even_symmetric_nondegenerate(k2), l).float_view();
            worst = std::max(worst, std::abs(lhs - rhs));
            if (std::abs(lhs - rhs) > tol_ * 10)
                ok = false;
        }
        std::ostringstream os;
        os << "15 direct sums, max deviation " << worst;
        record("rt-factorization", ok, os.str());
    }

    void partition_through_k() {
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            int n = 1 + static_cast<int>(rng_.below(2));
            IntMatrix c = random_int_matrix(rng_, n, -3, 3);
            // add an antisymmetric zero-diagonal perturbation: same K
            IntMatrix c2 = c;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Int a = rng_.range(-3, 3);
                    c2.at(i, j) += a;
                    c2.at(j, i) -= a;
                }
            EvenForm l = check_even_symmetric_nondegenerate(random_even_form(rng_, 1, 8));
            if (!(partition_function(c, l) == partition_function(c2, l)))
                ok = false;
        }
        record("partition-through-k", ok, "20 coupling pairs");
    }

    void slide_invariance() {
        bool ok = true;
        for (int trial = 0; trial < 20; ++trial) {
            int m = 1 + static_cast<int>(rng_.below(2));
            EvenForm k = check_even_symmetric_nondegenerate(random_even_form(rng_, 1, 6));
            EvenForm l = check_even_symmetric_nondegenerate(random_even_form(rng_, m, 12));
            MoveSequence seq;
            seq.push_back(Move::slide_by(random_unimodular(rng_, m)));
            InvarianceReport r = invariance_suite(k, l, seq);
            if (!r.all_slides_exact)
                ok = false;
            // parity: the slid matrix revalidated inside apply_slide already
        }
        record("slide-invariance-exact", ok, "20 random slides");
    }

    void stabilization_invariance() {
        bool ok = true;
        double worst = 0.0;
        for (int trial = 0; trial < 6; ++trial) {
            EvenForm k = check_even_symmetric_nondegenerate(random_even_form(rng_, 1, 3));
            EvenForm l = check_even_symmetric_nondegenerate(
                random_even_form(rng_, 1 + static_cast<int>(rng_.below(2)), 6));
            for (StabilizeBlock block :
                 {StabilizeBlock::H, StabilizeBlock::E8, StabilizeBlock::MinusE8}) {
                InvarianceReport r =
                    invariance_suite(k, l, MoveSequence{Move::stabilize_by(block)});
                worst = std::max(worst, r.max_deviation);
                if (r.max_deviation > tol_ * 100)
                    ok = false;
            }
        }
        std::ostringstream os;
        os << "H, E8, -E8 stabilizations, max deviation " << worst;
        record("stabilization-invariance", ok, os.str());
    }

    Rng rng_;
    double tol_;
    std::vector<CheckResult> results_;
};

} // namespace

std::vector<CheckResult> run_selftest(uint64_t seed, double tol) {
    return Suite(seed, tol).run();
}

} // namespace linkinv
