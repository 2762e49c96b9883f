#pragma once

#include <string>
#include <vector>

#include "linkinv/invariants.hpp"

namespace linkinv {

enum class StabilizeBlock { H, E8, MinusE8 };

// H = [[0,1],[1,0]] and the rank-8 even unimodular form of signature +8
// (negated for MinusE8).
IntMatrix stabilize_block_matrix(StabilizeBlock block);

struct Move {
    enum class Kind { Slide, Stabilize };
    Kind kind;
    IntMatrix slide; // unimodular, for Kind::Slide
    StabilizeBlock block = StabilizeBlock::H;

    static Move slide_by(IntMatrix p) { return Move{Kind::Slide, std::move(p), StabilizeBlock::H}; }
    static Move stabilize_by(StabilizeBlock b) { return Move{Kind::Stabilize, IntMatrix(), b}; }
};

using MoveSequence = std::vector<Move>;

// p^T L p for unimodular p; preserves |det|, signature and the cokernel.
EvenForm apply_slide(const EvenForm& l, const IntMatrix& p);

// Block-diagonal stabilization L (+) block.
EvenForm apply_stabilize(const EvenForm& l, StabilizeBlock block);

struct MoveOutcome {
    std::string description;
    bool is_slide = false;
    bool exact_equal = false; // slides: full invariant equal as exact data
    double float_deviation = 0.0;
    int linking_size = 0;
};

struct InvarianceReport {
    InvariantValue baseline;
    std::vector<MoveOutcome> outcomes;
    double max_deviation = 0.0;
    bool all_slides_exact = true;
};

// Applies the moves in sequence, recomputing RT_K(L') after each one and
// comparing against RT_K(L). Slides must match exactly; stabilizations are
// compared in the float view.
InvarianceReport invariance_suite(const EvenForm& k, const EvenForm& l,
                                  const MoveSequence& moves,
                                  long budget = kDefaultTermBudget);

// Moves file: one move per line, "slide <matrix-file>" or "stab H|E8|-E8".
// Matrix paths are resolved relative to the moves file's directory.
MoveSequence parse_moves_file(const std::string& path);

} // namespace linkinv
