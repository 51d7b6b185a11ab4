#pragma once

// Coseparability: a bicomodule retraction gamma of the comultiplication.
// Existence is a finite linear feasibility problem; one echelon-particular
// solution is returned together with the homogeneous solution dimension.

#include "corings/comonad.hpp"

#include <optional>

namespace corings {

struct Coseparability {
    std::optional<Mat> gamma; // quot[c,c] -> c
    std::size_t solution_space_dim = 0;
};

inline Coseparability coseparability(const Coring& c) {
    const Field& f = c.field();
    const Bimodule& M = c.carrier;
    const Chain& cc = c.cc;
    Chain c1 = Chain::of({M});
    Chain ccc = Chain::of({M, M, M});
    auto [t1, dl] = chain_apply(cc, {piece_map(0, 1, c1, c.comult, cc), piece_id(cc, 1)}, &ccc); // Delta x c
    auto [t2, dr] = chain_apply(cc, {piece_id(cc, 0), piece_map(1, 2, c1, c.comult, cc)}, &ccc); // c x Delta
    Mat ia = Mat::identity(f, M.left->dim);
    const Bimodule& CC = cc.total;

    auto gamma_left = [&](const Mat& x) { // (c x gamma) on [c,c,c] -> [c,c]
        auto [t, m] = chain_apply(ccc, {piece_id(ccc, 0), piece_map(1, 3, cc, x, c1)}, &cc);
        return m;
    };
    auto gamma_right = [&](const Mat& x) { // (gamma x c)
        auto [t, m] = chain_apply(ccc, {piece_map(0, 2, cc, x, c1), piece_id(ccc, 2)}, &cc);
        return m;
    };

    std::vector<std::function<Mat(const Mat&)>> conds = {
        [&](const Mat& x) { return x * CC.lact - M.lact * Mat::kron(ia, x); },
        [&](const Mat& x) { return x * CC.ract - M.ract * Mat::kron(x, ia); },
        // left colinearity: Delta gamma = (c x gamma)(Delta x c)
        [&](const Mat& x) { return c.comult * x - gamma_left(x) * dl; },
        // right colinearity: Delta gamma = (gamma x c)(c x Delta)
        [&](const Mat& x) { return c.comult * x - gamma_right(x) * dr; },
        // the affine part: gamma Delta = id
        [&](const Mat& x) { return x * c.comult; },
    };
    std::vector<Mat> rhs = {Mat::zero(f, M.dim, ia.rows() * CC.dim), Mat::zero(f, M.dim, CC.dim * ia.rows()),
                            Mat::zero(f, cc.total.dim, CC.dim), Mat::zero(f, cc.total.dim, CC.dim),
                            Mat::identity(f, M.dim)};
    auto sol = matrix_affine_solve(f, M.dim, CC.dim, conds, rhs);
    Coseparability out;
    out.solution_space_dim = sol.homogeneous.dim();
    if (sol.particular) out.gamma = *sol.particular;
    return out;
}

// the natural retraction r_m = (m x eps)(m x gamma)(rho x c) of the
// coaction of any comodule, available whenever gamma exists
inline Mat cosep_retraction(const Coring& c, const Mat& gamma, const Comodule& m) {
    Chain c1 = Chain::of({c.carrier});
    Chain mcc = Chain::of({m.carrier, c.carrier, c.carrier});
    auto [t1, s1] = chain_apply(m.mc, {piece_map(0, 1, Chain::of({m.carrier}), m.coaction, m.mc), piece_id(m.mc, 1)}, &mcc);
    auto [t2, s2] = chain_apply(mcc, {piece_id(mcc, 0), piece_map(1, 3, c.cc, gamma, c1)}, &m.mc);
    Bimodule A = regular_bimodule(c.algebra());
    Chain ma = Chain::of({m.carrier, A});
    auto [t3, s3] = chain_apply(m.mc, {piece_id(m.mc, 0), piece_map(1, 2, c1, c.counit, Chain::of({A}))}, &ma);
    return right_unit_of(ma) * s3 * s2 * s1;
}

} // namespace corings
