#pragma once

// Corings (comonads in the bimodule 2-category) and their comodules.  All
// structure maps live on quotient coordinates of explicit tensor chains;
// every axiom check inserts the canonical regrouping matrices, so the
// coherence identifications are concrete and the checks are exact.

#include "corings/tensor.hpp"

#include <memory>

namespace corings {

struct Coring {
    Bimodule carrier; // (A, A)
    Chain cc;         // [c, c]
    Mat comult;       // carrier.dim -> cc.total.dim
    Mat counit;       // carrier.dim -> A.dim
    std::string name;

    AlgebraPtr algebra() const { return carrier.left; }
    const Field& field() const { return carrier.field(); }
    std::size_t dim() const { return carrier.dim; }
};

using CoringPtr = std::shared_ptr<const Coring>;

inline CheckReport check_coring(const Coring& c) {
    CheckReport rep;
    const Field& f = c.field();
    const Bimodule& M = c.carrier;
    Bimodule A = regular_bimodule(c.algebra());
    // structure maps must be bimodule maps
    rep.merge(check_bimodule_map({M, c.cc.total, c.comult}));
    rep.merge(check_bimodule_map({M, A, c.counit}));
    if (!rep.ok()) return rep;

    Chain c1 = Chain::of({M});
    Chain ccc = Chain::of({M, M, M});
    auto [chain_l, dl] = chain_apply(c.cc, {piece_map(0, 1, c1, c.comult, c.cc), piece_id(c.cc, 1)}, &ccc);
    auto [chain_r, dr] = chain_apply(c.cc, {piece_id(c.cc, 0), piece_map(1, 2, c1, c.comult, c.cc)}, &ccc);
    Mat lhs = dl * c.comult, rhs = dr * c.comult;
    if (lhs != rhs) {
        for (std::size_t j = 0; j < M.dim; ++j)
            if (lhs.col(j) != rhs.col(j)) {
                rep.fail("coassociativity fails at basis element " + std::to_string(j) +
                         ": (comult x c)comult = " + lhs.col(j).transpose().str() +
                         ", (c x comult)comult = " + rhs.col(j).transpose().str());
                break;
            }
    }
    // counit: absorb the counit leg through the unit identification
    Chain ac = Chain::of({A, M});
    Chain ca = Chain::of({M, A});
    auto [tmp1, el] = chain_apply(c.cc, {piece_map(0, 1, c1, c.counit, Chain::of({A})), piece_id(c.cc, 1)}, &ac);
    Mat left_counit = left_unit_of(ac) * el * c.comult;
    auto [tmp2, er] = chain_apply(c.cc, {piece_id(c.cc, 0), piece_map(1, 2, c1, c.counit, Chain::of({A}))}, &ca);
    Mat right_counit = right_unit_of(ca) * er * c.comult;
    if (!left_counit.is_identity()) {
        for (std::size_t j = 0; j < M.dim; ++j)
            if (left_counit.col(j) != Mat::basis_column(f, M.dim, j)) {
                rep.fail("left counit fails at basis element " + std::to_string(j) + ": got " +
                         left_counit.col(j).transpose().str());
                break;
            }
    }
    if (!right_counit.is_identity()) {
        for (std::size_t j = 0; j < M.dim; ++j)
            if (right_counit.col(j) != Mat::basis_column(f, M.dim, j)) {
                rep.fail("right counit fails at basis element " + std::to_string(j) + ": got " +
                         right_counit.col(j).transpose().str());
                break;
            }
    }
    return rep;
}

inline CoringPtr make_coring(Bimodule carrier, Mat comult_quot, Mat counit, std::string name = "",
                             bool validate = true) {
    Coring c{carrier, Chain::of({carrier, carrier}), std::move(comult_quot), std::move(counit), name};
    if (c.name.empty()) c.name = carrier.name;
    if (validate) {
        auto rep = check_coring(c);
        if (!rep.ok()) throw std::invalid_argument("make_coring(" + c.name + "): " + rep.str());
    }
    return std::make_shared<Coring>(std::move(c));
}

// comultiplication supplied on flat c (x) c coordinates
inline CoringPtr make_coring_flat(Bimodule carrier, const Mat& comult_flat, Mat counit, std::string name = "",
                                  bool validate = true) {
    Chain cc = Chain::of({carrier, carrier});
    return make_coring(std::move(carrier), cc.proj * comult_flat, std::move(counit), std::move(name), validate);
}

// the trivial coring: carrier A, comult the unit identification, counit id
inline CoringPtr trivial_coring(AlgebraPtr a) {
    Bimodule A = regular_bimodule(a);
    Chain aa = Chain::of({A, A});
    return make_coring(A, right_unit_inv_of(aa), Mat::identity(a->f, a->dim), "triv(" + a->name + ")", false);
}

// matrix coalgebra M_n(k) over the ground field: comult e_ij -> sum_t e_it (x) e_tj
inline CoringPtr matrix_coalgebra(Field f, std::size_t n) {
    Bimodule V = vector_space(f, n * n, "Mc" + std::to_string(n));
    std::size_t d = n * n;
    Mat comult_flat(f, d * d, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) comult_flat.at((i * n + t) * d + (t * n + j), i * n + j) = f.one();
    Mat counit(f, 1, d);
    for (std::size_t i = 0; i < n; ++i) counit.at(0, i * n + i) = f.one();
    return make_coring_flat(V, comult_flat, counit);
}

// forget one side of a bimodule (the tensor coordinates over the remaining
// side are unchanged, so structure matrices stay valid)
inline Bimodule as_right_module(const Bimodule& m) {
    auto k = ground_algebra(m.field());
    return make_bimodule(k, m.right, m.dim, Mat::identity(m.field(), m.dim), m.ract, m.name, false);
}
inline Bimodule as_left_module(const Bimodule& m) {
    auto k = ground_algebra(m.field());
    return make_bimodule(m.left, k, m.dim, m.lact, Mat::identity(m.field(), m.dim), m.name, false);
}

// Right comodule of Omega-type: carrier is an (Omega, A)-bimodule, the
// coaction a 2-cell m -> m (x)_A c.
struct Comodule {
    CoringPtr coring;
    Bimodule carrier;
    Chain mc; // [m, c]
    Mat coaction;

    const Field& field() const { return carrier.field(); }
    std::size_t dim() const { return carrier.dim; }
};

struct LeftComodule {
    CoringPtr coring;
    Bimodule carrier; // (A, Omega)
    Chain cm;         // [c, m]
    Mat coaction;

    std::size_t dim() const { return carrier.dim; }
};

inline CheckReport check_comodule(const Comodule& m) {
    CheckReport rep;
    const Coring& c = *m.coring;
    if (!(*m.carrier.right == *c.algebra())) {
        rep.fail("carrier is not a module over the coring base algebra");
        return rep;
    }
    rep.merge(check_bimodule_map({m.carrier, m.mc.total, m.coaction}));
    if (!rep.ok()) return rep;
    Chain m1 = Chain::of({m.carrier});
    Chain c1 = Chain::of({c.carrier});
    Chain mcc = Chain::of({m.carrier, c.carrier, c.carrier});
    auto [t1, d1] = chain_apply(m.mc, {piece_map(0, 1, m1, m.coaction, m.mc), piece_id(m.mc, 1)}, &mcc);
    auto [t2, d2] = chain_apply(m.mc, {piece_id(m.mc, 0), piece_map(1, 2, c1, c.comult, c.cc)}, &mcc);
    Mat lhs = d1 * m.coaction, rhs = d2 * m.coaction;
    if (lhs != rhs) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (lhs.col(j) != rhs.col(j)) {
                rep.fail("coaction not coassociative at basis element " + std::to_string(j));
                break;
            }
    }
    Bimodule A = regular_bimodule(c.algebra());
    Chain ma = Chain::of({m.carrier, A});
    auto [t3, e] = chain_apply(m.mc, {piece_id(m.mc, 0), piece_map(1, 2, c1, c.counit, Chain::of({A}))}, &ma);
    Mat cu = right_unit_of(ma) * e * m.coaction;
    if (!cu.is_identity()) {
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (cu.col(j) != Mat::basis_column(m.field(), m.dim(), j)) {
                rep.fail("counit normalization fails at basis element " + std::to_string(j) + ": got " +
                         cu.col(j).transpose().str());
                break;
            }
    }
    return rep;
}

inline CheckReport check_left_comodule(const LeftComodule& n) {
    CheckReport rep;
    const Coring& c = *n.coring;
    if (!(*n.carrier.left == *c.algebra())) {
        rep.fail("carrier is not a left module over the coring base algebra");
        return rep;
    }
    rep.merge(check_bimodule_map({n.carrier, n.cm.total, n.coaction}));
    if (!rep.ok()) return rep;
    Chain n1 = Chain::of({n.carrier});
    Chain c1 = Chain::of({c.carrier});
    Chain ccm = Chain::of({c.carrier, c.carrier, n.carrier});
    auto [t1, d1] = chain_apply(n.cm, {piece_id(n.cm, 0), piece_map(1, 2, n1, n.coaction, n.cm)}, &ccm);
    auto [t2, d2] = chain_apply(n.cm, {piece_map(0, 1, c1, c.comult, c.cc), piece_id(n.cm, 1)}, &ccm);
    Mat lhs = d1 * n.coaction, rhs = d2 * n.coaction;
    if (lhs != rhs) rep.fail("left coaction not coassociative");
    Bimodule A = regular_bimodule(c.algebra());
    Chain an = Chain::of({A, n.carrier});
    auto [t3, e] = chain_apply(n.cm, {piece_map(0, 1, c1, c.counit, Chain::of({A})), piece_id(n.cm, 1)}, &an);
    Mat cu = left_unit_of(an) * e * n.coaction;
    if (!cu.is_identity()) rep.fail("left counit normalization fails");
    return rep;
}

inline Comodule make_comodule(CoringPtr coring, Bimodule carrier, Mat coaction, bool validate = true) {
    Comodule m{coring, carrier, Chain::of({carrier, coring->carrier}), std::move(coaction)};
    if (validate) {
        auto rep = check_comodule(m);
        if (!rep.ok()) throw std::invalid_argument("make_comodule: " + rep.str());
    }
    return m;
}

inline Comodule make_comodule_flat(CoringPtr coring, Bimodule carrier, const Mat& coaction_flat,
                                   bool validate = true) {
    Chain mc = Chain::of({carrier, coring->carrier});
    return make_comodule(std::move(coring), std::move(carrier), mc.proj * coaction_flat, validate);
}

inline LeftComodule make_left_comodule(CoringPtr coring, Bimodule carrier, Mat coaction, bool validate = true) {
    LeftComodule n{coring, carrier, Chain::of({coring->carrier, carrier}), std::move(coaction)};
    if (validate) {
        auto rep = check_left_comodule(n);
        if (!rep.ok()) throw std::invalid_argument("make_left_comodule: " + rep.str());
    }
    return n;
}

// c as a right comodule over itself (left structure forgotten)
inline Comodule regular_comodule(CoringPtr coring) {
    Bimodule carrier = as_right_module(coring->carrier);
    Chain mc = Chain::of({carrier, coring->carrier});
    if (mc.total.dim != coring->cc.total.dim)
        throw std::logic_error("regular_comodule: coordinate mismatch");
    return make_comodule(coring, carrier, coring->comult, false);
}

// c as a left comodule over itself
inline LeftComodule left_regular_comodule(CoringPtr coring) {
    Bimodule carrier = as_left_module(coring->carrier);
    Chain cm = Chain::of({coring->carrier, carrier});
    if (cm.total.dim != coring->cc.total.dim)
        throw std::logic_error("left_regular_comodule: coordinate mismatch");
    return make_left_comodule(coring, carrier, coring->comult, false);
}

// cofree comodule y (x)_A c with coaction y (x) comult
inline Comodule cofree_comodule(CoringPtr coring, const Bimodule& y) {
    const Bimodule& c = coring->carrier;
    Chain yc = Chain::of({y, c});
    Chain ycc = Chain::of({y, c, c});
    auto [t, d] = chain_apply(yc, {piece_id(yc, 0), piece_map(1, 2, Chain::of({c}), coring->comult, coring->cc)}, &ycc);
    Comodule m{coring, yc.total, Chain::of({yc.total, c}), Mat()};
    Mat re = regroup(ycc, {yc, Chain::of({c})}, m.mc);
    m.coaction = re * d;
    return m;
}

// basis of comodule morphisms m -> n: bimodule maps commuting with the coactions
inline Subspace comodule_homs(const Comodule& m, const Comodule& n) {
    if (m.coring->carrier != n.coring->carrier || m.coring->comult != n.coring->comult)
        throw std::invalid_argument("comodule_homs: coring mismatch");
    if (!(*m.carrier.left == *n.carrier.left)) throw std::invalid_argument("comodule_homs: Omega mismatch");
    const Field& f = m.field();
    Mat ia = Mat::identity(f, m.carrier.right->dim);
    Mat io = Mat::identity(f, m.carrier.left->dim);
    Mat ic = Mat::identity(f, m.coring->dim());
    std::vector<std::function<Mat(const Mat&)>> conds = {
        [&](const Mat& x) { return x * m.carrier.ract - n.carrier.ract * Mat::kron(x, ia); },
        [&](const Mat& x) { return x * m.carrier.lact - n.carrier.lact * Mat::kron(io, x); },
        [&](const Mat& x) {
            Mat xc = n.mc.proj * Mat::kron(x, ic) * m.mc.sect;
            return n.coaction * x - xc * m.coaction;
        },
    };
    return matrix_solution_space(f, n.dim(), m.dim(), conds);
}

struct Bicomodule {
    CoringPtr left_coring;  // D over B
    CoringPtr right_coring; // C over A
    Bimodule carrier;       // (B, A)
    Chain dm, mc;           // [d, m], [m, c]
    Mat lcoact, rcoact;
};

inline CheckReport check_bicomodule(const Bicomodule& b) {
    CheckReport rep;
    const Coring& D = *b.left_coring;
    const Coring& C = *b.right_coring;
    rep.merge(check_bimodule_map({b.carrier, b.dm.total, b.lcoact}));
    rep.merge(check_bimodule_map({b.carrier, b.mc.total, b.rcoact}));
    if (!rep.ok()) return rep;
    // right comodule axioms on (m, rcoact)
    Comodule right{b.right_coring, b.carrier, b.mc, b.rcoact};
    rep.merge(check_comodule(right));
    // left comodule axioms on (m, lcoact)
    LeftComodule left{b.left_coring, b.carrier, b.dm, b.lcoact};
    rep.merge(check_left_comodule(left));
    if (!rep.ok()) return rep;
    // compatibility (d x rcoact) lcoact = (lcoact x c) rcoact
    Chain dmc = Chain::of({D.carrier, b.carrier, C.carrier});
    auto [t1, d1] = chain_apply(b.dm, {piece_id(b.dm, 0), piece_map(1, 2, Chain::of({b.carrier}), b.rcoact, b.mc)}, &dmc);
    auto [t2, d2] = chain_apply(b.mc, {piece_map(0, 1, Chain::of({b.carrier}), b.lcoact, b.dm), piece_id(b.mc, 1)}, &dmc);
    if (d1 * b.lcoact != d2 * b.rcoact) rep.fail("left and right coactions do not commute");
    return rep;
}

inline bool grouplike_verify(const Coring& c, const Mat& g) {
    if (g.rows() != c.dim() || g.cols() != 1) throw std::invalid_argument("grouplike_verify: bad element shape");
    Mat dg = c.comult * g;
    Mat gg = c.cc.proj * Mat::kron(g, g);
    if (dg != gg) return false;
    return c.counit * g == c.algebra()->unit;
}

// exhaustive search over F_p, offered for p^dim bounded and dim <= 8
inline std::vector<Mat> grouplike_search(const Coring& c, std::uint64_t work_bound = 2'000'000) {
    const Field& f = c.field();
    if (f.is_rational())
        throw std::domain_error("grouplike_search: solving the quadratic system over Q is not supported; verification only");
    std::size_t d = c.dim();
    if (d > 8) throw std::domain_error("grouplike_search: enumeration offered only for dim <= 8");
    long double total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= static_cast<long double>(f.characteristic());
    if (total > static_cast<long double>(work_bound)) throw std::domain_error("grouplike_search: p^dim exceeds work bound");
    std::vector<Mat> found;
    std::vector<std::uint64_t> digits(d, 0);
    while (true) {
        Mat g(f, d, 1);
        for (std::size_t i = 0; i < d; ++i) g.at(i, 0) = f.from_int(static_cast<long long>(digits[i]));
        if (grouplike_verify(c, g)) found.push_back(g);
        std::size_t k = 0;
        while (k < d && ++digits[k] == f.characteristic()) digits[k++] = 0;
        if (k == d) break;
    }
    return found;
}

// (A, rho) with rho(a) = 1 (x) g.a, a comodule iff g is grouplike
inline Comodule comodule_from_grouplike(CoringPtr coring, const Mat& g, bool validate = true) {
    const Field& f = coring->field();
    AlgebraPtr a = coring->algebra();
    Bimodule A = right_regular_module(a);
    Chain ac = Chain::of({A, coring->carrier});
    Mat rho(f, ac.total.dim, a->dim);
    for (std::size_t j = 0; j < a->dim; ++j) {
        Mat gaj = coring->carrier.right_action(Mat::basis_column(f, a->dim, j)) * g; // g . a_j
        Mat col = ac.proj * Mat::kron(a->unit, gaj);
        for (std::size_t r = 0; r < ac.total.dim; ++r) rho.at(r, j) = col.at(r, 0);
    }
    return make_comodule(coring, A, rho, validate);
}

} // namespace corings
