#include "linkinv/torsion_group.hpp"

#include "linkinv/errors.hpp"

namespace linkinv {

GroupPresentation GroupPresentation::cokernel(const EvenForm& form) {
    return build(form.matrix(), true);
}

GroupPresentation GroupPresentation::cokernel_pairing_only(const IntMatrix& sym) {
    if (!sym.is_square() || !sym.is_symmetric())
        throw NonSymmetricError("cokernel presentation requires a symmetric matrix");
    return build(sym, false);
}

GroupPresentation GroupPresentation::build(const IntMatrix& mat, bool even) {
    GroupPresentation g;
    g.rank_ = mat.rows();
    g.form_ = mat;
    g.even_ = even;
    g.snf_ = smith_normal_form(mat);

    Int det_abs = 1;
    for (int i = 0; i < g.rank_; ++i)
        det_abs *= g.snf_.d_mat.at(i, i);
    if (det_abs == 0)
        throw DegenerateError("cokernel requires a nondegenerate matrix");
    g.order_ = det_abs;
    g.inv_form_ = rational_inverse(mat);

    IntMatrix u_inv = integer_inverse(g.snf_.u_mat);
    for (int i = 0; i < g.rank_; ++i) {
        const Int& d = g.snf_.d_mat.at(i, i);
        if (d == 1)
            continue;
        g.factors_.push_back(d);
        g.factor_rows_.push_back(i);
        std::vector<Int> lift(g.rank_);
        for (int r = 0; r < g.rank_; ++r)
            lift[r] = u_inv.at(r, i);
        g.gens_.push_back(std::move(lift));
    }
    return g;
}

void GroupPresentation::validate(const GroupElement& u) const {
    if (u.coords.size() != factors_.size() ||
        u.canonical_lift.size() != static_cast<size_t>(rank_))
        throw ElementMismatchError("element does not belong to this presentation");
    for (size_t i = 0; i < factors_.size(); ++i)
        if (u.coords[i] < 0 || u.coords[i] >= factors_[i])
            throw ElementMismatchError("element coordinate out of range");
}

std::vector<Int> GroupPresentation::lift_from_coords(const std::vector<Int>& coords) const {
    std::vector<Int> lift(rank_, Int(0));
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0)
            continue;
        for (int r = 0; r < rank_; ++r)
            lift[r] += coords[i] * gens_[i][r];
    }
    return lift;
}

GroupElement GroupPresentation::identity() const {
    return GroupElement{std::vector<Int>(factors_.size(), Int(0)),
                        std::vector<Int>(rank_, Int(0))};
}

GroupElement GroupPresentation::generator(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= factors_.size())
        throw ElementMismatchError("generator index out of range");
    std::vector<Int> coords(factors_.size(), Int(0));
    coords[i] = 1;
    return element_from_coords(std::move(coords));
}

GroupElement GroupPresentation::element_from_coords(std::vector<Int> coords) const {
    if (coords.size() != factors_.size())
        throw ElementMismatchError("coordinate count does not match factor count");
    for (size_t i = 0; i < coords.size(); ++i) {
        mpz_fdiv_r(coords[i].get_mpz_t(), coords[i].get_mpz_t(), factors_[i].get_mpz_t());
    }
    std::vector<Int> lift = lift_from_coords(coords);
    return GroupElement{std::move(coords), std::move(lift)};
}

GroupElement GroupPresentation::element_from_lift(const std::vector<Int>& lift) const {
    if (lift.size() != static_cast<size_t>(rank_))
        throw ElementMismatchError("lift length does not match source rank");
    std::vector<Int> coords(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i) {
        Int c = 0;
        int row = factor_rows_[i];
        for (int r = 0; r < rank_; ++r)
            c += snf_.u_mat.at(row, r) * lift[r];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), factors_[i].get_mpz_t());
        coords[i] = c;
    }
    return element_from_coords(std::move(coords));
}

GroupElement GroupPresentation::add(const GroupElement& u, const GroupElement& v) const {
    validate(u);
    validate(v);
    std::vector<Int> coords(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i)
        coords[i] = u.coords[i] + v.coords[i];
    return element_from_coords(std::move(coords));
}

GroupElement GroupPresentation::scalar_mul(const GroupElement& u, const Int& n) const {
    validate(u);
    std::vector<Int> coords(factors_.size());
    for (size_t i = 0; i < factors_.size(); ++i)
        coords[i] = u.coords[i] * n;
    return element_from_coords(std::move(coords));
}

std::vector<GroupElement> GroupPresentation::elements() const {
    std::vector<GroupElement> out;
    if (!order_.fits_slong_p())
        throw BudgetExceededError("group too large to enumerate");
    out.reserve(order_.get_ui());
    std::vector<Int> coords(factors_.size(), Int(0));
    while (true) {
        out.push_back(element_from_coords(coords));
        int pos = static_cast<int>(factors_.size()) - 1;
        while (pos >= 0) {
            coords[pos] += 1;
            if (coords[pos] < factors_[pos])
                break;
            coords[pos] = 0;
            --pos;
        }
        if (pos < 0)
            break;
    }
    return out;
}

Rat GroupPresentation::pairing_raw(const GroupElement& u, const GroupElement& v) const {
    validate(u);
    validate(v);
    Rat acc = 0;
    for (int i = 0; i < rank_; ++i) {
        if (u.canonical_lift[i] == 0)
            continue;
        Rat row = 0;
        for (int j = 0; j < rank_; ++j) {
            if (v.canonical_lift[j] == 0)
                continue;
            row += inv_form_.at(i, j) * Rat(v.canonical_lift[j]);
        }
        acc += Rat(u.canonical_lift[i]) * row;
    }
    return acc;
}

Rat GroupPresentation::quadratic_raw(const GroupElement& u) const {
    return pairing_raw(u, u);
}

PhaseRational GroupPresentation::pairing(const GroupElement& u, const GroupElement& v) const {
    return PhaseRational::mod1(pairing_raw(u, v));
}

PhaseRational GroupPresentation::quadratic(const GroupElement& u) const {
    if (!even_)
        throw NotEvenError(
            "quadratic evaluation requires an even presentation (pairing-only group)");
    return PhaseRational::mod2(quadratic_raw(u));
}

PhaseRational tensor_quadratic(const IntMatrix& form, const GroupPresentation& g,
                               std::span<const GroupElement> tuple) {
    if (!form.is_square() || !form.is_symmetric())
        throw NonSymmetricError("tensor form must be symmetric");
    for (int i = 0; i < form.rows(); ++i)
        if (form.at(i, i) % 2 != 0)
            throw NotEvenError(i);
    if (!g.quadratic_allowed())
        throw NotEvenError("tensor quadratic requires an even presentation");
    if (static_cast<size_t>(form.rows()) != tuple.size())
        throw SizeMismatchError("tuple length does not match form size");

    Rat acc = 0;
    for (int i = 0; i < form.rows(); ++i) {
        if (form.at(i, i) != 0)
            acc += Rat(form.at(i, i)) * g.quadratic_raw(tuple[i]);
        for (int j = i + 1; j < form.cols(); ++j) {
            if (form.at(i, j) == 0)
                continue;
            acc += Rat(2 * form.at(i, j)) * g.pairing_raw(tuple[i], tuple[j]);
        }
    }
    return PhaseRational::mod2(acc);
}

} // namespace linkinv
