#pragma once

// Cotensor products as explicit equalizer subspaces, and exact purity
// probes: an equalizer is y-pure when tensoring by y keeps it exact, which
// over a field is a statement about three computable dimensions.

#include "corings/coring.hpp"

namespace corings {

struct EqualizerPair {
    BimoduleMap f, g; // parallel maps m -> n
    Subspace sub;     // ker(f - g) in m coordinates
    Mat incl;         // m.dim x dim
};

inline EqualizerPair equalize(const BimoduleMap& f, const BimoduleMap& g) {
    if (!f.src.same_type(g.src) || !f.dst.same_type(g.dst)) throw std::invalid_argument("equalize: shape mismatch");
    EqualizerPair e{f, g, kernel(f.mat - g.mat), Mat()};
    e.incl = e.sub.basis;
    return e;
}

// solve incl . X = map, i.e. corestrict a map landing in the equalizer
inline Mat corestrict(const EqualizerPair& e, const Mat& map) {
    auto x = solve(e.incl, map);
    if (!x || e.incl * *x != map) throw std::domain_error("corestrict: image does not lie in the equalizer");
    return *x;
}

// the equalizer of left-linear maps is a left submodule; package it
inline Bimodule equalizer_left_module(const EqualizerPair& e) {
    const Field& f = e.f.src.field();
    AlgebraPtr B = e.f.src.left;
    std::size_t d = e.sub.dim();
    Mat lact(f, d, B->dim * d);
    for (std::size_t u = 0; u < B->dim; ++u) {
        auto x = solve(e.incl, e.f.src.left_op(u) * e.incl);
        if (!x) throw std::logic_error("equalizer_left_module: subspace not stable under the left action");
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) lact.at(r, u * d + c) = x->at(r, c);
    }
    return left_module(B, d, lact, "eq", false);
}

inline Bimodule equalizer_right_module(const EqualizerPair& e) {
    const Field& f = e.f.src.field();
    AlgebraPtr C = e.f.src.right;
    std::size_t d = e.sub.dim();
    Mat ract(f, d, d * C->dim);
    for (std::size_t u = 0; u < C->dim; ++u) {
        auto x = solve(e.incl, e.f.src.right_op(u) * e.incl);
        if (!x) throw std::logic_error("equalizer_right_module: subspace not stable under the right action");
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) ract.at(r, c * C->dim + u) = x->at(r, c);
    }
    return right_module(C, d, ract, "eq", false);
}

struct PurityProbe {
    bool pass = false;
    std::size_t dim_tensored_equalizer = 0; // dim y (x) E
    std::size_t dim_tensored_kernel = 0;    // dim ker(y (x) (f-g))
    std::size_t rank_natural = 0;           // rank of y (x) E -> y (x) m
};

// left probe: apply y (x)_B -  on the left, y a right B-module
inline PurityProbe left_purity_probe(const EqualizerPair& e, const Bimodule& y) {
    const Field& fld = e.f.src.field();
    if (!(*y.right == *e.f.src.left)) throw std::invalid_argument("left_purity_probe: algebra mismatch");
    Bimodule E = equalizer_left_module(e);
    TensorOver tyE = tensor_over(y, E);
    TensorOver tym = tensor_over(y, as_left_module(e.f.src));
    TensorOver tyn = tensor_over(y, as_left_module(e.f.dst));
    Mat iy = Mat::identity(fld, y.dim);
    Mat diff = e.f.mat - e.g.mat;
    Mat tensored = tyn.proj * Mat::kron(iy, diff) * tym.sect;
    Mat natural = tym.proj * Mat::kron(iy, e.incl) * tyE.sect;
    PurityProbe p;
    p.dim_tensored_equalizer = tyE.total.dim;
    p.dim_tensored_kernel = kernel(tensored).dim();
    p.rank_natural = rank(natural);
    if (!(tensored * natural).is_zero()) throw std::logic_error("left_purity_probe: natural map does not equalize");
    p.pass = p.rank_natural == p.dim_tensored_equalizer && p.rank_natural == p.dim_tensored_kernel;
    return p;
}

// right probe: apply - (x)_C y on the right, y a left C-module
inline PurityProbe right_purity_probe(const EqualizerPair& e, const Bimodule& y) {
    const Field& fld = e.f.src.field();
    if (!(*y.left == *e.f.src.right)) throw std::invalid_argument("right_purity_probe: algebra mismatch");
    Bimodule E = equalizer_right_module(e);
    TensorOver tEy = tensor_over(E, y);
    TensorOver tmy = tensor_over(as_right_module(e.f.src), y);
    TensorOver tny = tensor_over(as_right_module(e.f.dst), y);
    Mat iy = Mat::identity(fld, y.dim);
    Mat diff = e.f.mat - e.g.mat;
    Mat tensored = tny.proj * Mat::kron(diff, iy) * tmy.sect;
    Mat natural = tmy.proj * Mat::kron(e.incl, iy) * tEy.sect;
    PurityProbe p;
    p.dim_tensored_equalizer = tEy.total.dim;
    p.dim_tensored_kernel = kernel(tensored).dim();
    p.rank_natural = rank(natural);
    if (!(tensored * natural).is_zero()) throw std::logic_error("right_purity_probe: natural map does not equalize");
    p.pass = p.rank_natural == p.dim_tensored_equalizer && p.rank_natural == p.dim_tensored_kernel;
    return p;
}

// The cotensor product m []^c n of a right comodule and a left comodule:
// the equalizer of rho (x) n and m (x) lambda inside m (x)_A n.
struct CotensorSpace {
    CoringPtr coring;
    Bimodule m_carrier, n_carrier;
    Chain mn;  // [m, n]
    Chain mcn; // [m, c, n]
    EqualizerPair eq;

    std::size_t dim() const { return eq.sub.dim(); }
};

inline CotensorSpace cotensor(const Comodule& m, const LeftComodule& n) {
    if (m.coring->carrier != n.coring->carrier || m.coring->comult != n.coring->comult)
        throw std::invalid_argument("cotensor: coring mismatch");
    CotensorSpace ct;
    ct.coring = m.coring;
    ct.m_carrier = m.carrier;
    ct.n_carrier = n.carrier;
    ct.mn = Chain::of({m.carrier, n.carrier});
    ct.mcn = Chain::of({m.carrier, m.coring->carrier, n.carrier});
    auto [t1, r1] = chain_apply(ct.mn, {piece_map(0, 1, Chain::of({m.carrier}), m.coaction, m.mc), piece_id(ct.mn, 1)}, &ct.mcn);
    auto [t2, r2] = chain_apply(ct.mn, {piece_id(ct.mn, 0), piece_map(1, 2, Chain::of({n.carrier}), n.coaction, n.cm)}, &ct.mcn);
    ct.eq = equalize({ct.mn.total, ct.mcn.total, r1}, {ct.mn.total, ct.mcn.total, r2});
    return ct;
}

// the canonical comparison m -> m []^c c of Lemma "all comodules are
// equalizers"; always bijective, with inverse (m x counit) o incl
struct CotensorCounit {
    CotensorSpace ct;
    Mat comparison; // m -> m []^c c
    Mat inverse;    // m []^c c -> m
    bool bijective = false;
};

inline CotensorCounit cotensor_with_coring(const Comodule& m) {
    CotensorCounit out{cotensor(m, left_regular_comodule(m.coring)), Mat(), Mat(), false};
    // coaction lands in the equalizer by coassociativity
    out.comparison = corestrict(out.ct.eq, m.coaction);
    const Coring& c = *m.coring;
    Bimodule A = regular_bimodule(c.algebra());
    Chain ma = Chain::of({m.carrier, A});
    auto [t, e] = chain_apply(out.ct.mn, {piece_id(out.ct.mn, 0), piece_map(1, 2, Chain::of({c.carrier}), c.counit, Chain::of({A}))}, &ma);
    out.inverse = right_unit_of(ma) * e * out.ct.eq.incl;
    out.bijective = (out.inverse * out.comparison).is_identity() && (out.comparison * out.inverse).is_identity();
    return out;
}

} // namespace corings
