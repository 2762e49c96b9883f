#pragma once

#include <span>
#include <vector>

#include "linkinv/exact_linalg.hpp"
#include "linkinv/phase.hpp"

namespace linkinv {

// An element of a finite abelian cokernel, held as coordinates in the
// generator basis together with the canonical integer lift sum_i u_i g_i.
// Elements compare equal iff their coordinates are equal.
struct GroupElement {
    std::vector<Int> coords;         // 0 <= coords[i] < N_i
    std::vector<Int> canonical_lift; // in Z^n

    bool operator==(const GroupElement& rhs) const { return coords == rhs.coords; }
};

// The finite abelian group Z^n / K Z^n presented by its invariant factors
// N_1 | ... | N_r (trivial factors dropped) with integer generator lifts, the
// Smith decomposition used to reduce arbitrary lifts, and the exact inverse
// of the presenting matrix.
class GroupPresentation {
public:
    // Full presentation from a validated even form: quadratic evaluations on.
    static GroupPresentation cokernel(const EvenForm& form);
    // Pairing-only presentation from any symmetric nondegenerate matrix;
    // quadratic() refuses such presentations.
    static GroupPresentation cokernel_pairing_only(const IntMatrix& sym);

    int source_rank() const { return rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    const std::vector<std::vector<Int>>& generator_lifts() const { return gens_; }
    const SmithDecomposition& reduction_data() const { return snf_; }
    const IntMatrix& form_matrix() const { return form_; }
    const RationalMatrix& inverse_form() const { return inv_form_; }
    bool quadratic_allowed() const { return even_; }
    // |det K| = product of all invariant factors.
    const Int& order() const { return order_; }

    // Throws ElementMismatchError unless the element's coordinates fit this
    // presentation.
    void validate(const GroupElement& u) const;

    GroupElement identity() const;
    GroupElement generator(int i) const;
    GroupElement element_from_coords(std::vector<Int> coords) const;
    GroupElement element_from_lift(const std::vector<Int>& lift) const;
    GroupElement add(const GroupElement& u, const GroupElement& v) const;
    GroupElement scalar_mul(const GroupElement& u, const Int& n) const;

    // All |det K| elements in mixed-radix order on coords, last coordinate
    // fastest. Deterministic.
    std::vector<GroupElement> elements() const;

    // Linking pairing <lift_u, K^{-1} lift_v> reduced mod 1, in [0, 1).
    PhaseRational pairing(const GroupElement& u, const GroupElement& v) const;
    // Quadratic value <lift_u, K^{-1} lift_u> on the canonical lift, reduced
    // mod 2, in [0, 2). Requires an even presentation.
    PhaseRational quadratic(const GroupElement& u) const;

    // Unreduced exact rationals, for accumulation before a single reduction.
    Rat pairing_raw(const GroupElement& u, const GroupElement& v) const;
    Rat quadratic_raw(const GroupElement& u) const;

private:
    GroupPresentation() = default;
    static GroupPresentation build(const IntMatrix& mat, bool even);
    std::vector<Int> lift_from_coords(const std::vector<Int>& coords) const;

    int rank_ = 0;
    std::vector<Int> factors_;
    std::vector<int> factor_rows_; // rows of d_mat holding the nontrivial factors
    std::vector<std::vector<Int>> gens_;
    SmithDecomposition snf_;
    IntMatrix form_;
    RationalMatrix inv_form_;
    Int order_ = 1;
    bool even_ = false;
};

// sum_{i,j} form_ij * Q(x_i, x_j) reduced mod 2, diagonal terms evaluated on
// a single canonical lift. form must be symmetric with even diagonal and the
// presentation must allow quadratic evaluation.
PhaseRational tensor_quadratic(const IntMatrix& form, const GroupPresentation& g,
                               std::span<const GroupElement> tuple);

} // namespace linkinv
