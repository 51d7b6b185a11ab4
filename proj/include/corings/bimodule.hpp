#pragma once

// Bimodules and bimodule maps: the 1- and 2-cells of the bimodule
// 2-category over k.  A (A,B)-bimodule stores the two action tensors
//   lact : A (x) M -> M   and   ract : M (x) B -> M
// on flat tensor coordinates.  Maps are matrices validated against both
// actions at construction.

#include "corings/algebra.hpp"

namespace corings {

struct Bimodule {
    AlgebraPtr left, right;
    std::size_t dim = 0;
    Mat lact; // dim x (left->dim * dim)
    Mat ract; // dim x (dim * right->dim)
    std::string name;

    const Field& field() const { return left->f; }

    // operator m -> a.m for a column a in the left algebra
    Mat left_action(const Mat& a) const {
        const Field& f = field();
        Mat r(f, dim, dim);
        for (std::size_t i = 0; i < left->dim; ++i) {
            if (f.is_zero(a.at(i, 0))) continue;
            for (std::size_t rr = 0; rr < dim; ++rr)
                for (std::size_t j = 0; j < dim; ++j)
                    r.at(rr, j) = f.add(r.at(rr, j), f.mul(a.at(i, 0), lact.at(rr, i * dim + j)));
        }
        return r;
    }

    // operator m -> m.b
    Mat right_action(const Mat& b) const {
        const Field& f = field();
        Mat r(f, dim, dim);
        for (std::size_t j = 0; j < right->dim; ++j) {
            if (f.is_zero(b.at(j, 0))) continue;
            for (std::size_t rr = 0; rr < dim; ++rr)
                for (std::size_t i = 0; i < dim; ++i)
                    r.at(rr, i) = f.add(r.at(rr, i), f.mul(b.at(j, 0), ract.at(rr, i * right->dim + j)));
        }
        return r;
    }

    // operator m -> b_u . m for the u-th left algebra basis element
    Mat left_op(std::size_t u) const {
        Mat r(field(), dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) r.at(i, j) = lact.at(i, u * dim + j);
        return r;
    }

    // operator m -> m . b_u for the u-th right algebra basis element
    Mat right_op(std::size_t u) const {
        Mat r(field(), dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) r.at(i, j) = ract.at(i, j * right->dim + u);
        return r;
    }

    bool same_type(const Bimodule& o) const { return *left == *o.left && *right == *o.right && dim == o.dim; }

    bool operator==(const Bimodule& o) const {
        return *left == *o.left && *right == *o.right && dim == o.dim && lact == o.lact && ract == o.ract;
    }
};

inline CheckReport check_bimodule(const Bimodule& m) {
    CheckReport rep;
    const Field& f = m.field();
    const Algebra& A = *m.left;
    const Algebra& B = *m.right;
    if (m.lact.rows() != m.dim || m.lact.cols() != A.dim * m.dim) rep.fail("lact tensor has wrong shape");
    if (m.ract.rows() != m.dim || m.ract.cols() != m.dim * B.dim) rep.fail("ract tensor has wrong shape");
    if (!rep.ok()) return rep;
    Mat im = Mat::identity(f, m.dim);
    Mat ia = Mat::identity(f, A.dim);
    Mat ib = Mat::identity(f, B.dim);
    if (m.lact * Mat::kron(A.mult, im) != m.lact * Mat::kron(ia, m.lact)) rep.fail("left action not associative");
    if (m.lact * Mat::kron(A.unit, im) != im) rep.fail("left action not unital");
    if (m.ract * Mat::kron(m.ract, ib) != m.ract * Mat::kron(im, B.mult)) rep.fail("right action not associative");
    if (m.ract * Mat::kron(im, B.unit) != im) rep.fail("right action not unital");
    if (m.ract * Mat::kron(m.lact, ib) != m.lact * Mat::kron(ia, m.ract)) rep.fail("left and right actions do not commute");
    return rep;
}

inline Bimodule make_bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, Mat lact, Mat ract,
                              std::string name = "", bool validate = true) {
    Bimodule m{std::move(left), std::move(right), dim, std::move(lact), std::move(ract), std::move(name)};
    if (validate) {
        auto rep = check_bimodule(m);
        if (!rep.ok()) throw std::invalid_argument("make_bimodule(" + m.name + "): " + rep.str());
    }
    return m;
}

// A as an (A,A)-bimodule by multiplication: the identity 1-cell at A
inline Bimodule regular_bimodule(AlgebraPtr a) {
    return make_bimodule(a, a, a->dim, a->mult, a->mult, a->name, false);
}

// right A-module = (k, A)-bimodule
inline Bimodule right_module(AlgebraPtr a, std::size_t dim, Mat ract, std::string name = "", bool validate = true) {
    auto k = ground_algebra(a->f);
    Mat lact = Mat::identity(a->f, dim); // scalar action
    return make_bimodule(k, std::move(a), dim, lact, std::move(ract), std::move(name), validate);
}

// left B-module = (B, k)-bimodule
inline Bimodule left_module(AlgebraPtr b, std::size_t dim, Mat lact, std::string name = "", bool validate = true) {
    auto k = ground_algebra(b->f);
    Mat ract = Mat::identity(b->f, dim);
    return make_bimodule(std::move(b), k, dim, std::move(lact), ract, std::move(name), validate);
}

inline Bimodule vector_space(Field f, std::size_t dim, std::string name = "") {
    auto k = ground_algebra(f);
    return make_bimodule(k, k, dim, Mat::identity(f, dim), Mat::identity(f, dim), std::move(name), false);
}

// A as a right module over itself
inline Bimodule right_regular_module(AlgebraPtr a) {
    return right_module(a, a->dim, a->mult, a->name, false);
}

inline Bimodule left_regular_module(AlgebraPtr a) {
    return left_module(a, a->dim, a->mult, a->name, false);
}

inline Bimodule direct_sum(const Bimodule& a, const Bimodule& b) {
    if (!(*a.left == *b.left) || !(*a.right == *b.right))
        throw std::invalid_argument("direct_sum: algebra mismatch");
    const Field& f = a.field();
    std::size_t d = a.dim + b.dim;
    std::size_t la = a.left->dim, ra = a.right->dim;
    Mat lact(f, d, la * d), ract(f, d, d * ra);
    for (std::size_t i = 0; i < la; ++i) {
        for (std::size_t rr = 0; rr < a.dim; ++rr)
            for (std::size_t j = 0; j < a.dim; ++j) lact.at(rr, i * d + j) = a.lact.at(rr, i * a.dim + j);
        for (std::size_t rr = 0; rr < b.dim; ++rr)
            for (std::size_t j = 0; j < b.dim; ++j) lact.at(a.dim + rr, i * d + a.dim + j) = b.lact.at(rr, i * b.dim + j);
    }
    for (std::size_t j = 0; j < ra; ++j) {
        for (std::size_t rr = 0; rr < a.dim; ++rr)
            for (std::size_t i = 0; i < a.dim; ++i) ract.at(rr, i * ra + j) = a.ract.at(rr, i * ra + j);
        for (std::size_t rr = 0; rr < b.dim; ++rr)
            for (std::size_t i = 0; i < b.dim; ++i) ract.at(a.dim + rr, (a.dim + i) * ra + j) = b.ract.at(rr, i * ra + j);
    }
    return make_bimodule(a.left, a.right, d, lact, ract, a.name + "+" + b.name, false);
}

struct BimoduleMap {
    Bimodule src, dst;
    Mat mat; // dst.dim x src.dim

    BimoduleMap operator-(const BimoduleMap& o) const { return {src, dst, mat - o.mat}; }
};

inline CheckReport check_bimodule_map(const BimoduleMap& h) {
    CheckReport rep;
    const Field& f = h.src.field();
    if (!(*h.src.left == *h.dst.left) || !(*h.src.right == *h.dst.right)) {
        rep.fail("source and target do not share algebras");
        return rep;
    }
    if (h.mat.rows() != h.dst.dim || h.mat.cols() != h.src.dim) {
        rep.fail("matrix has wrong shape");
        return rep;
    }
    Mat ia = Mat::identity(f, h.src.left->dim);
    Mat ib = Mat::identity(f, h.src.right->dim);
    if (h.mat * h.src.lact != h.dst.lact * Mat::kron(ia, h.mat)) rep.fail("map is not left-linear");
    if (h.mat * h.src.ract != h.dst.ract * Mat::kron(h.mat, ib)) rep.fail("map is not right-linear");
    return rep;
}

inline BimoduleMap make_bimodule_map(Bimodule src, Bimodule dst, Mat mat, bool validate = true) {
    BimoduleMap h{std::move(src), std::move(dst), std::move(mat)};
    if (validate) {
        auto rep = check_bimodule_map(h);
        if (!rep.ok()) throw std::invalid_argument("make_bimodule_map: " + rep.str());
    }
    return h;
}

inline BimoduleMap identity_map(const Bimodule& m) {
    return {m, m, Mat::identity(m.field(), m.dim)};
}

inline BimoduleMap compose(const BimoduleMap& g, const BimoduleMap& f) {
    // g after f
    return {f.src, g.dst, g.mat * f.mat};
}

// basis of all bimodule maps m -> n (commuting with both actions)
inline Subspace hom_bimodule(const Bimodule& m, const Bimodule& n) {
    if (!(*m.left == *n.left) || !(*m.right == *n.right)) throw std::invalid_argument("hom_bimodule: algebra mismatch");
    const Field& f = m.field();
    Mat ia = Mat::identity(f, m.left->dim);
    Mat ib = Mat::identity(f, m.right->dim);
    std::vector<std::function<Mat(const Mat&)>> conds = {
        [&](const Mat& x) { return x * m.lact - n.lact * Mat::kron(ia, x); },
        [&](const Mat& x) { return x * m.ract - n.ract * Mat::kron(x, ib); },
    };
    return matrix_solution_space(f, n.dim, m.dim, conds);
}

} // namespace corings
