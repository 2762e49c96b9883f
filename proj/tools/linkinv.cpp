// Command-line surface: reads matrices in the plain text format, runs the
// exact engine, prints exact Gauss-sum serializations and float views.
//
// Exit codes: 0 success / identity holds, 1 input or domain error,
// 2 an identity residual exceeded the tolerance.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <string>

#include "linkinv/errors.hpp"
#include "linkinv/invariants.hpp"
#include "linkinv/moves.hpp"
#include "linkinv/selftest.hpp"

using namespace linkinv;

namespace {

std::string fmt_complex(std::complex<double> z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "re %.12f im %.12f", z.real(), z.imag());
    return buf;
}

std::string fmt_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", r);
    return buf;
}

struct Options {
    double tol = 1e-9;
    long budget = kDefaultTermBudget;
    uint64_t seed = 1;
    std::string mode = "both";

    bool exact() const { return mode != "float"; }
    bool floats() const { return mode != "exact"; }
};

EvenForm load_even(const std::string& path, const char* role) {
    try {
        return check_even_symmetric_nondegenerate(parse_matrix_file(path));
    } catch (const Error& e) {
        throw Error(std::string(role) + " (" + path + "): " + e.what());
    }
}

int run_det(const std::string& kfile) {
    IntMatrix m = parse_matrix_file(kfile);
    std::printf("det %s\n", determinant(m).get_str().c_str());
    return 0;
}

int run_signature(const std::string& kfile) {
    IntMatrix m = parse_matrix_file(kfile);
    std::printf("signature %d\n", signature(m));
    return 0;
}

int run_snf(const std::string& kfile) {
    IntMatrix m = parse_matrix_file(kfile);
    SmithDecomposition s = smith_normal_form(m);
    std::printf("# u\n%s# d\n%s# v\n%s", format_matrix(s.u_mat).c_str(),
                format_matrix(s.d_mat).c_str(), format_matrix(s.v_mat).c_str());
    return 0;
}

int run_group(const std::string& kfile) {
    EvenForm k = load_even(kfile, "K");
    GroupPresentation g = GroupPresentation::cokernel(k);
    std::string line = "factors:";
    for (const Int& f : g.invariant_factors())
        line += " " + f.get_str();
    std::printf("%s\n", line.c_str());
    std::printf("order %s\n", g.order().get_str().c_str());
    for (size_t i = 0; i < g.generator_lifts().size(); ++i) {
        std::string lift;
        for (const Int& e : g.generator_lifts()[i])
            lift += (lift.empty() ? "" : " ") + e.get_str();
        std::printf("generator %zu: %s\n", i + 1, lift.c_str());
    }
    return 0;
}

int run_partition(const Options& opt, const std::string& cfile, const std::string& lfile) {
    IntMatrix c = parse_matrix_file(cfile);
    EvenForm l = load_even(lfile, "L");
    GaussSum z = partition_function(c, l, opt.budget);
    if (opt.exact())
        std::printf("%s", z.serialize().c_str());
    if (opt.floats())
        std::printf("Z %s\n", fmt_complex(z.evaluate()).c_str());
    return 0;
}

int run_rt(const Options& opt, const std::string& kfile, const std::string& lfile) {
    EvenForm k = load_even(kfile, "K");
    EvenForm l = load_even(lfile, "L");
    InvariantValue rt = rt_invariant(k, l, opt.budget);
    if (opt.exact())
        std::printf("%s", rt.serialize().c_str());
    if (opt.floats())
        std::printf("RT %s\n", fmt_complex(rt.float_view()).c_str());
    return 0;
}

int run_reciprocity(const Options& opt, const std::string& kfile, const std::string& lfile) {
    EvenForm k = load_even(kfile, "K");
    EvenForm l = load_even(lfile, "L");
    ReciprocityReport r = reciprocity_check(k, l, opt.budget);
    if (opt.exact()) {
        std::printf("# lhs\n%s", r.lhs.serialize().c_str());
        std::printf("# rhs\n%s", r.rhs.serialize().c_str());
    }
    if (opt.floats()) {
        std::printf("lhs %s\n", fmt_complex(r.lhs.evaluate()).c_str());
        std::printf("rhs %s\n", fmt_complex(r.rhs.float_view()).c_str());
    }
    double bound = opt.tol * (1.0 + r.lhs_tuples.get_d() + r.rhs_tuples.get_d());
    std::printf("residual %s\n", fmt_residual(r.residual).c_str());
    if (r.residual > bound) {
        std::printf("reciprocity FAILED (bound %s)\n", fmt_residual(bound).c_str());
        return 2;
    }
    std::printf("reciprocity holds\n");
    return 0;
}

int run_duality(const Options& opt, const std::string& cfile, const std::string& lfile) {
    IntMatrix c = parse_matrix_file(cfile);
    EvenForm l = load_even(lfile, "L");
    DualityReport r = duality_check(c, l, opt.budget);
    if (opt.exact()) {
        std::printf("# Z\n%s", r.z.serialize().c_str());
        std::printf("# Z_dual\n%s", r.z_dual.serialize().c_str());
        std::printf("# RT_K(L)\n%s", r.rt_kl.serialize().c_str());
        std::printf("# RT_L(K)\n%s", r.rt_lk.serialize().c_str());
    }
    if (opt.floats()) {
        std::printf("Z %s\n", fmt_complex(r.z.evaluate()).c_str());
        std::printf("Z_dual %s\n", fmt_complex(r.z_dual.evaluate()).c_str());
        std::printf("RT_K(L) %s\n", fmt_complex(r.rt_kl.float_view()).c_str());
        std::printf("RT_L(K) %s\n", fmt_complex(r.rt_lk.float_view()).c_str());
    }
    double bound = opt.tol * (1.0 + r.term_total.get_d());
    std::printf("residual_kl %s\n", fmt_residual(r.residual_kl).c_str());
    std::printf("residual_dual %s\n", fmt_residual(r.residual_dual).c_str());
    std::printf("residual_chained %s\n", fmt_residual(r.residual_lk).c_str());
    if (r.residual_kl > bound || r.residual_dual > bound) {
        std::printf("duality FAILED (bound %s)\n", fmt_residual(bound).c_str());
        return 2;
    }
    std::printf("duality holds\n");
    return 0;
}

int run_lens(const Options& opt, long k, long p) {
    LensReport r = lens_example(k, p);
    std::printf("lens k=%ld p=%ld\n", k, p);
    if (opt.exact()) {
        std::printf("# Z\n%s", r.z.serialize().c_str());
        std::printf("# RT\n%s", r.rt.serialize().c_str());
    }
    if (opt.floats()) {
        std::printf("Z %s\n", fmt_complex(r.z_value).c_str());
        std::printf("RT %s\n", fmt_complex(r.rt_value).c_str());
    }
    std::printf("residual %s\n", fmt_residual(r.residual).c_str());
    return r.residual > opt.tol ? 2 : 0;
}

int run_moves(const Options& opt, const std::string& kfile, const std::string& lfile,
              const std::string& mfile) {
    EvenForm k = load_even(kfile, "K");
    EvenForm l = load_even(lfile, "L");
    MoveSequence moves = parse_moves_file(mfile);
    InvarianceReport r = invariance_suite(k, l, moves, opt.budget);
    if (opt.floats())
        std::printf("baseline RT %s\n", fmt_complex(r.baseline.float_view()).c_str());
    bool fail = false;
    for (const MoveOutcome& o : r.outcomes) {
        if (o.is_slide) {
            std::printf("%s: %s\n", o.description.c_str(),
                        o.exact_equal ? "exact" : "NOT EXACT");
            if (!o.exact_equal)
                fail = true;
        } else {
            std::printf("%s: deviation %s\n", o.description.c_str(),
                        fmt_residual(o.float_deviation).c_str());
            if (o.float_deviation > opt.tol)
                fail = true;
        }
    }
    std::printf("max deviation %s\n", fmt_residual(r.max_deviation).c_str());
    std::printf("invariance %s\n", fail ? "FAILED" : "holds");
    return fail ? 2 : 0;
}

int run_selftest(const Options& opt) {
    std::printf("seed %llu\n", static_cast<unsigned long long>(opt.seed));
    bool fail = false;
    for (const CheckResult& c : linkinv::run_selftest(opt.seed, opt.tol)) {
        std::printf("%s %-26s %s\n", c.passed ? "ok  " : "FAIL", c.name.c_str(),
                    c.detail.c_str());
        if (!c.passed)
            fail = true;
    }
    return fail ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact U(1)^n Chern-Simons partition functions and abelian "
                 "Reshetikhin-Turaev invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--tol", opt.tol, "identity tolerance")->check(CLI::PositiveNumber);
    app.add_option("--budget", opt.budget, "term budget per enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--mode", opt.mode, "output mode")
        ->check(CLI::IsMember({"exact", "float", "both"}));

    std::string cfile, kfile, lfile, mfile;
    long lens_k = 1, lens_p = 1;

    CLI::App* det = app.add_subcommand("det", "exact determinant");
    det->add_option("-K", kfile, "matrix file")->required();

    CLI::App* sig = app.add_subcommand("signature", "exact signature");
    sig->add_option("-K", kfile, "matrix file")->required();

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form u, d, v");
    snf->add_option("-K", kfile, "matrix file")->required();

    CLI::App* group = app.add_subcommand("group", "invariant factors and generator lifts");
    group->add_option("-K", kfile, "even form file")->required();

    CLI::App* partition = app.add_subcommand("partition", "partition function of a coupling");
    partition->add_option("-C", cfile, "coupling matrix file")->required();
    partition->add_option("-L", lfile, "even linking matrix file")->required();

    CLI::App* rt = app.add_subcommand("rt", "Reshetikhin-Turaev invariant RT_K(L)");
    rt->add_option("-K", kfile, "even form file")->required();
    rt->add_option("-L", lfile, "even linking matrix file")->required();

    CLI::App* recip = app.add_subcommand("reciprocity", "two-sided reciprocity check");
    recip->add_option("-K", kfile, "even form file")->required();
    recip->add_option("-L", lfile, "even form file")->required();

    CLI::App* duality = app.add_subcommand("duality", "Z = |det L|^{n/2} RT_K(L) = |det K|^{m/2} RT_L(K)");
    duality->add_option("-C", cfile, "coupling matrix file")->required();
    duality->add_option("-L", lfile, "even linking matrix file")->required();

    CLI::App* lens = app.add_subcommand("lens", "lens space family golden values");
    lens->add_option("-k", lens_k, "coupling constant")->required();
    lens->add_option("-p", lens_p, "lens space order")->required();

    CLI::App* moves = app.add_subcommand("moves", "RT invariance under a move sequence");
    moves->add_option("-K", kfile, "even form file")->required();
    moves->add_option("-L", lfile, "even linking matrix file")->required();
    moves->add_option("-M", mfile, "moves file")->required();

    CLI::App* selftest = app.add_subcommand("selftest", "run the full property suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (det->parsed())
            return run_det(kfile);
        if (sig->parsed())
            return run_signature(kfile);
        if (snf->parsed())
            return run_snf(kfile);
        if (group->parsed())
            return run_group(kfile);
        if (partition->parsed())
            return run_partition(opt, cfile, lfile);
        if (rt->parsed())
            return run_rt(opt, kfile, lfile);
        if (recip->parsed())
            return run_reciprocity(opt, kfile, lfile);
        if (duality->parsed())
            return run_duality(opt, cfile, lfile);
        if (lens->parsed())
            return run_lens(opt, lens_k, lens_p);
        if (moves->parsed())
            return run_moves(opt, kfile, lfile, mfile);
        if (selftest->parsed())
            return run_selftest(opt);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return 1;
    }
    return 1;
}
