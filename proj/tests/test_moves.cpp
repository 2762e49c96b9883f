#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "linkinv/errors.hpp"
#include "linkinv/moves.hpp"
#include "linkinv/random_gen.hpp"

using namespace linkinv;

namespace {
EvenForm even(const IntMatrix& m) { return check_even_symmetric_nondegenerate(m); }
} // namespace

TEST_CASE("stabilization blocks") {
    IntMatrix h = stabilize_block_matrix(StabilizeBlock::H);
    CHECK(h == IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(determinant(h) == -1);
    CHECK(signature(h) == 0);

    IntMatrix e8 = stabilize_block_matrix(StabilizeBlock::E8);
    CHECK(determinant(e8) == 1);
    CHECK(signature(e8) == 8);
    CHECK(signature(stabilize_block_matrix(StabilizeBlock::MinusE8)) == -8);
}

TEST_CASE("slides") {
    EvenForm l = even(IntMatrix::from_rows({{2, 0}, {0, 4}}));
    CHECK(apply_slide(l, IntMatrix::identity(2)) == l);

    EvenForm l1 = even(IntMatrix::from_rows({{2}}));
    CHECK(apply_slide(l1, IntMatrix::from_rows({{-1}})).matrix() ==
          IntMatrix::from_rows({{2}}));

    // add row 1 to row 2 (p = upper elementary): det preserved
    EvenForm slid = apply_slide(l, IntMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(slid.matrix() == IntMatrix::from_rows({{2, 2}, {2, 6}}));
    CHECK(slid.det() == 8);

    CHECK_THROWS_AS(apply_slide(l, IntMatrix::from_rows({{2, 0}, {0, 1}})),
                    NotUnimodularError);
    CHECK_THROWS_AS(apply_slide(l, IntMatrix::identity(3)), SizeMismatchError);
}

TEST_CASE("stabilizations") {
    EvenForm l = even(IntMatrix::from_rows({{2}}));
    EvenForm lh = apply_stabilize(l, StabilizeBlock::H);
    CHECK(lh.matrix() == IntMatrix::from_rows({{2, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    CHECK(lh.det() == -l.det());
    CHECK(lh.signature() == l.signature());

    EvenForm le8 = apply_stabilize(l, StabilizeBlock::E8);
    CHECK(le8.signature() == l.signature() + 8);
    CHECK(le8.abs_det() == l.abs_det());

    EvenForm lme8 = apply_stabilize(l, StabilizeBlock::MinusE8);
    CHECK(lme8.signature() == l.signature() - 8);
}

TEST_CASE("invariance under slides is exact") {
    Rng rng(31);
    EvenForm k = even(IntMatrix::from_rows({{2, 1}, {1, 2}}));

    // identity slide first: trivially the same invariant
    {
        EvenForm l = even(IntMatrix::from_rows({{4}}));
        InvarianceReport r =
            invariance_suite(k, l, MoveSequence{Move::slide_by(IntMatrix::identity(1))});
        CHECK(r.outcomes.at(0).exact_equal);
        CHECK(r.max_deviation == 0.0);
    }

    for (int m : {1, 2}) {
        EvenForm l = even(random_even_form(rng, m, 12));
        MoveSequence seq;
        for (int i = 0; i < 8; ++i)
            seq.push_back(Move::slide_by(random_unimodular(rng, m)));
        InvarianceReport r = invariance_suite(k, l, seq);
        CHECK(r.all_slides_exact);
        CHECK(r.max_deviation < 1e-12);
        for (const MoveOutcome& o : r.outcomes)
            CHECK(o.exact_equal);
    }
}

TEST_CASE("invariance under stabilization is numeric") {
    EvenForm k = even(IntMatrix::from_rows({{2}}));
    EvenForm l = even(IntMatrix::from_rows({{2}}));
    for (StabilizeBlock block :
         {StabilizeBlock::H, StabilizeBlock::E8, StabilizeBlock::MinusE8}) {
        InvarianceReport r = invariance_suite(k, l, MoveSequence{Move::stabilize_by(block)});
        CHECK(r.max_deviation < 1e-9);
    }

    // mixed sequence: stabilize, then slide the bigger matrix
    Rng rng(32);
    MoveSequence seq;
    seq.push_back(Move::stabilize_by(StabilizeBlock::H));
    seq.push_back(Move::slide_by(random_unimodular(rng, 3)));
    InvarianceReport r = invariance_suite(k, l, seq);
    CHECK(r.all_slides_exact);
    CHECK(r.max_deviation < 1e-9);
}

TEST_CASE("every move output is a valid even form") {
    Rng rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        EvenForm l = even(random_even_form(rng, 2, 12));
        EvenForm slid = apply_slide(l, random_unimodular(rng, 2));
        CHECK(slid.abs_det() == l.abs_det());
        CHECK(slid.signature() == l.signature());
        // construction through check_even_symmetric_nondegenerate already
        // revalidated symmetry, evenness and nondegeneracy
        EvenForm st = apply_stabilize(l, StabilizeBlock::H);
        CHECK(st.size() == l.size() + 2);
    }
}

TEST_CASE("budget guard") {
    EvenForm k = even(IntMatrix::from_rows({{4, 2}, {2, 4}})); // order 12
    EvenForm l = even(IntMatrix::from_rows({{2}}));
    MoveSequence seq{Move::stabilize_by(StabilizeBlock::E8)};
    CHECK_THROWS_AS(invariance_suite(k, l, seq, 1000), BudgetExceededError);
}

TEST_CASE("moves file parsing") {
    std::string dir = LINKINV_TEST_DATA_DIR;
    MoveSequence moves = parse_moves_file(dir + "/moves_demo.txt");
    REQUIRE(moves.size() == 3);
    CHECK(moves[0].kind == Move::Kind::Slide);
    CHECK(moves[1].kind == Move::Kind::Stabilize);
    CHECK(moves[1].block == StabilizeBlock::H);
    CHECK(moves[2].block == StabilizeBlock::E8);

    std::string bad =
        (std::filesystem::temp_directory_path() / "linkinv_bad_moves.txt").string();
    {
        std::ofstream out(bad);
        out << "wiggle 3\n";
    }
    CHECK_THROWS_AS(parse_moves_file(bad), ParseError);
    std::filesystem::remove(bad);
}
