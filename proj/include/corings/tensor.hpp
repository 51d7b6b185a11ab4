#pragma once

// Tensor products over algebras and iterated tensor chains.
//
// tensor_over(m, n) realizes m (x)_B n as the quotient of the flat tensor
// space by the span of the middle-action relations (m.b)(x)n - m(x)(b.n);
// the quotient basis is the set of non-pivot flat coordinates of the
// relation echelon, so every construction downstream is reproducible.
//
// A Chain is the left-associated iterated tensor of a slot list with maps
// to and from the full flat tensor coordinates.  Structure maps between
// chains are assembled from Pieces: flat-level matrices on contiguous slot
// ranges that descend to the quotients.  All of the coherence (associator
// and unit) identifications become explicit matrices factored through flat
// coordinates.

#include "corings/bimodule.hpp"

namespace corings {

struct TensorOver {
    Bimodule left_factor, right_factor;
    Bimodule total; // (A, C) when m is (A,B) and n is (B,C)
    Mat proj;       // total.dim x (m.dim * n.dim)
    Mat sect;       // (m.dim * n.dim) x total.dim
    Subspace relations;
};

inline TensorOver tensor_over(const Bimodule& m, const Bimodule& n, std::string name = "") {
    if (!(*m.right == *n.left)) throw std::invalid_argument("tensor_over: middle algebra mismatch");
    const Field& f = m.field();
    const Algebra& B = *m.right;
    std::size_t flat = m.dim * n.dim;
    Echelon rel(f, flat);
    // span{ (m_i . b_u) (x) n_j  -  m_i (x) (b_u . n_j) }
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t u = 0; u < B.dim; ++u) {
            Mat mb = m.ract.col(i * B.dim + u); // m_i . b_u
            for (std::size_t j = 0; j < n.dim; ++j) {
                Mat bn = n.lact.col(u * n.dim + j); // b_u . n_j
                std::vector<Rat> row(flat, f.zero());
                for (std::size_t r = 0; r < m.dim; ++r)
                    if (!f.is_zero(mb.at(r, 0))) row[r * n.dim + j] = f.add(row[r * n.dim + j], mb.at(r, 0));
                for (std::size_t r = 0; r < n.dim; ++r)
                    if (!f.is_zero(bn.at(r, 0))) row[i * n.dim + r] = f.sub(row[i * n.dim + r], bn.at(r, 0));
                rel.insert(std::move(row));
            }
        }
    TensorOver t;
    t.left_factor = m;
    t.right_factor = n;
    t.relations = Subspace::from_echelon(flat, rel);
    auto [proj, sect] = quotient_maps(flat, t.relations);
    t.proj = proj;
    t.sect = sect;
    // induced actions: a.(class x) = class((a.m-part) x), (class x).c likewise
    const Algebra& A = *m.left;
    const Algebra& C = *n.right;
    std::size_t d = proj.rows();
    Mat lact(f, d, A.dim * d), ract(f, d, d * C.dim);
    Mat in = Mat::identity(f, n.dim);
    Mat im = Mat::identity(f, m.dim);
    for (std::size_t u = 0; u < A.dim; ++u) {
        Mat Lu(f, m.dim, m.dim);
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < m.dim; ++c) Lu.at(r, c) = m.lact.at(r, u * m.dim + c);
        Mat op = proj * Mat::kron(Lu, in) * sect;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) lact.at(r, u * d + c) = op.at(r, c);
    }
    for (std::size_t u = 0; u < C.dim; ++u) {
        Mat Ru(f, n.dim, n.dim);
        for (std::size_t r = 0; r < n.dim; ++r)
            for (std::size_t c = 0; c < n.dim; ++c) Ru.at(r, c) = n.ract.at(r, c * C.dim + u);
        Mat op = proj * Mat::kron(im, Ru) * sect;
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) ract.at(r, c * C.dim + u) = op.at(r, c);
    }
    if (name.empty()) name = m.name + "(x)" + n.name;
    t.total = make_bimodule(m.left, n.right, d, lact, ract, name, false);
    return t;
}

// class of an elementary tensor: proj applied to x (x) y
inline Mat elementary_tensor(const TensorOver& t, const Mat& x, const Mat& y) {
    return t.proj * Mat::kron(x, y);
}

// quotient-level map t_src -> t_dst induced by a pair of bimodule maps
inline BimoduleMap induced_map(const TensorOver& src, const TensorOver& dst, const BimoduleMap& fm,
                               const BimoduleMap& gm, bool validate = true) {
    if (validate) {
        auto r1 = check_bimodule_map(fm);
        auto r2 = check_bimodule_map(gm);
        if (!r1.ok() || !r2.ok()) throw std::invalid_argument("induced_map: factors are not bimodule maps");
    }
    Mat m = dst.proj * Mat::kron(fm.mat, gm.mat) * src.sect;
    return {src.total, dst.total, m};
}

// Left-associated iterated tensor of a composable slot list.
struct Chain {
    std::vector<Bimodule> slots;
    Bimodule total;
    Mat proj; // total.dim x prod(slot dims)
    Mat sect;

    std::size_t flat_dim() const {
        std::size_t d = 1;
        for (const auto& s : slots) d *= s.dim;
        return d;
    }

    static Chain of(std::vector<Bimodule> slots, std::string name = "") {
        if (slots.empty()) throw std::invalid_argument("Chain::of: empty slot list");
        Chain c;
        const Field& f = slots.front().field();
        c.slots = slots;
        c.total = slots.front();
        c.proj = Mat::identity(f, slots.front().dim);
        c.sect = c.proj;
        for (std::size_t k = 1; k < slots.size(); ++k) {
            TensorOver t = tensor_over(c.total, slots[k]);
            std::size_t dk = slots[k].dim;
            c.proj = t.proj * Mat::kron(c.proj, Mat::identity(f, dk));
            c.sect = Mat::kron(c.sect, Mat::identity(f, dk)) * t.sect;
            c.total = t.total;
        }
        if (!name.empty()) c.total.name = name;
        return c;
    }
};

// One step of a chain-level structure map: the flat matrix must descend to
// the quotients (it is a flat-level lift of a genuine 2-cell on the range).
struct Piece {
    std::size_t lo = 0, hi = 0;  // source slot range [lo, hi); lo == hi inserts at a boundary
    std::vector<Bimodule> out;   // replacement slots
    Mat flat;                    // prod(out dims) x prod(src slot dims in range)
};

inline Piece piece_id(const Chain& src, std::size_t slot) {
    return {slot, slot + 1, {src.slots[slot]}, Mat::identity(src.total.field(), src.slots[slot].dim)};
}

// a map given on the quotient of a contiguous subchain, landing in the quotient of another chain
inline Piece piece_map(std::size_t lo, std::size_t hi, const Chain& src_sub, const Mat& quot_map,
                       const Chain& dst_sub) {
    if (quot_map.cols() != src_sub.total.dim || quot_map.rows() != dst_sub.total.dim)
        throw std::invalid_argument("piece_map: map shape mismatch");
    return {lo, hi, dst_sub.slots, dst_sub.sect * quot_map * src_sub.proj};
}

// slot-to-slot map
inline Piece piece_map1(std::size_t slot, const BimoduleMap& h) {
    return {slot, slot + 1, {h.dst}, h.mat};
}

// insert the unit 1-cell of algebra B at a boundary position
inline Piece piece_insert_unit(std::size_t at, AlgebraPtr b) {
    Bimodule bb = regular_bimodule(b);
    Mat flat = b->unit; // k -> B
    return {at, at, {bb}, flat};
}

// insert a 2-cell B -> (subchain) at a boundary (e.g. eta of an adjoint pair)
inline Piece piece_insert_from_unit(std::size_t at, const Chain& dst_sub, const Mat& from_algebra,
                                    const AlgebraPtr& b) {
    // from_algebra: dst_sub.total.dim x b->dim, evaluated at the unit of b
    return {at, at, dst_sub.slots, dst_sub.sect * from_algebra * b->unit};
}

// absorb an algebra slot into the module on its right: [B, M] -> [M]
inline Piece piece_absorb_left(const Chain& src, std::size_t algebra_slot) {
    const Bimodule& m = src.slots[algebra_slot + 1];
    return {algebra_slot, algebra_slot + 2, {m}, m.lact};
}

// absorb an algebra slot into the module on its left: [M, B] -> [M]
inline Piece piece_absorb_right(const Chain& src, std::size_t algebra_slot) {
    const Bimodule& m = src.slots[algebra_slot - 1];
    return {algebra_slot - 1, algebra_slot + 1, {m}, m.ract};
}

// drop a counit-like scalar factor is not needed: counit maps land in an algebra slot

// Apply ordered pieces covering all source slots; returns the target chain
// and the quotient-level matrix.  If dst is supplied it must match the
// concatenated piece outputs and is reused (chains are deterministic).
inline std::pair<Chain, Mat> chain_apply(const Chain& src, std::vector<Piece> pieces,
                                         const Chain* dst_hint = nullptr) {
    const Field& f = src.total.field();
    // validate coverage
    std::size_t pos = 0;
    for (const auto& p : pieces) {
        if (p.lo != pos || p.hi < p.lo || p.hi > src.slots.size()) throw std::invalid_argument("chain_apply: pieces do not tile the source");
        pos = p.hi;
    }
    if (pos != src.slots.size()) throw std::invalid_argument("chain_apply: pieces do not cover the source");
    std::vector<Bimodule> out_slots;
    Mat big = Mat::identity(f, 1);
    for (const auto& p : pieces) {
        big = Mat::kron(big, p.flat);
        for (const auto& s : p.out) out_slots.push_back(s);
    }
    Chain dst = dst_hint ? *dst_hint : Chain::of(out_slots);
    if (dst_hint) {
        if (dst.slots.size() != out_slots.size()) throw std::invalid_argument("chain_apply: dst hint mismatch");
        for (std::size_t i = 0; i < out_slots.size(); ++i)
            if (!dst.slots[i].same_type(out_slots[i])) throw std::invalid_argument("chain_apply: dst hint slot mismatch");
    }
    Mat q = dst.proj * big * src.sect;
    return {std::move(dst), std::move(q)};
}

// canonical regrouping: quot(coarse) -> quot(fine) where coarse.slots[i] is
// the total of groups[i] and concat(groups[i].slots) == fine.slots
inline Mat ungroup(const Chain& coarse, const std::vector<Chain>& groups, const Chain& fine) {
    const Field& f = fine.total.field();
    Mat big = Mat::identity(f, 1);
    for (const auto& g : groups) big = Mat::kron(big, g.sect);
    return fine.proj * big * coarse.sect;
}

inline Mat regroup(const Chain& fine, const std::vector<Chain>& groups, const Chain& coarse) {
    const Field& f = fine.total.field();
    Mat big = Mat::identity(f, 1);
    for (const auto& g : groups) big = Mat::kron(big, g.proj);
    return coarse.proj * big * fine.sect;
}

// unit identifications as quotient-level isos
// lam : quot([A, M]) -> M and its inverse
inline Mat left_unit_of(const Chain& am) {
    return am.slots[1].lact * am.sect;
}
inline Mat left_unit_inv_of(const Chain& am) {
    const Field& f = am.total.field();
    return am.proj * Mat::kron(am.slots[0].left->unit, Mat::identity(f, am.slots[1].dim));
}
// rho : quot([M, B]) -> M and its inverse
inline Mat right_unit_of(const Chain& mb) {
    return mb.slots[0].ract * mb.sect;
}
inline Mat right_unit_inv_of(const Chain& mb) {
    const Field& f = mb.total.field();
    return mb.proj * Mat::kron(Mat::identity(f, mb.slots[0].dim), mb.slots[1].right->unit);
}

} // namespace corings
