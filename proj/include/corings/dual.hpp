#pragma once

// Right duals, dual bases and the trace-ideal generator test.
//
// For a (B,A)-bimodule S, dual_module computes S* = Hom_A(S, A) as the
// solution space of the right-A-linearity equations, carrying the
// (A,B)-bimodule structure (a.f.b)(u) = a f(b.u).  dual_basis solves
// sum_i e_i . f_i(u) = u; solvability is exactly finite generation +
// projectivity as a right A-module.

#include "corings/tensor.hpp"

#include <optional>

namespace corings {

struct DualModule {
    Bimodule module;              // S* as an (A,B)-bimodule
    std::vector<Mat> functionals; // basis functionals, each dimA x dimS
    Mat eval_flat;                // dimA x (dimS* * dimS): f (x) u -> f(u)
};

inline DualModule dual_module(const Bimodule& s) {
    const Field& f = s.field();
    const Algebra& A = *s.right;
    const Algebra& B = *s.left;
    // right-A-linearity: X . R^S_u = R^A_u . X for all basis u
    std::vector<std::function<Mat(const Mat&)>> conds;
    std::vector<Mat> rs, ra;
    for (std::size_t u = 0; u < A.dim; ++u) {
        rs.push_back(s.right_op(u));
        ra.push_back(A.right_mult(A.basis(u)));
    }
    for (std::size_t u = 0; u < A.dim; ++u)
        conds.push_back([&, u](const Mat& x) { return x * rs[u] - ra[u] * x; });
    Subspace sol = matrix_solution_space(f, A.dim, s.dim, conds);
    std::size_t d = sol.dim();
    std::vector<Mat> fs;
    for (std::size_t k = 0; k < d; ++k) fs.push_back(Mat::unvec(sol.basis.col(k), A.dim, s.dim));
    // actions: (a.f)(u) = a f(u), (f.b)(u) = f(b.u); coordinates via the solution basis
    Mat lact(f, d, A.dim * d), ract(f, d, d * B.dim);
    for (std::size_t u = 0; u < A.dim; ++u) {
        Mat L = A.left_mult(A.basis(u));
        for (std::size_t k = 0; k < d; ++k) {
            Mat img = (L * fs[k]).vec();
            Mat coord = sol.coords(img);
            for (std::size_t r = 0; r < d; ++r) lact.at(r, u * d + k) = coord.at(r, 0);
        }
    }
    for (std::size_t u = 0; u < B.dim; ++u) {
        Mat Lb = s.left_op(u);
        for (std::size_t k = 0; k < d; ++k) {
            Mat img = (fs[k] * Lb).vec();
            Mat coord = sol.coords(img);
            for (std::size_t r = 0; r < d; ++r) ract.at(r, k * B.dim + u) = coord.at(r, 0);
        }
    }
    DualModule out;
    out.module = make_bimodule(s.right, s.left, d, lact, ract, s.name + "*");
    out.functionals = fs;
    out.eval_flat = Mat(f, A.dim, d * s.dim);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < s.dim; ++j)
            for (std::size_t r = 0; r < A.dim; ++r) out.eval_flat.at(r, k * s.dim + j) = fs[k].at(r, j);
    return out;
}

struct DualBasis {
    // e_i a column in S, f_i a functional matrix dimA x dimS
    std::vector<std::pair<Mat, Mat>> pairs;
};

// solves sum_j e_j . g_j(u) = u over g_j in S*; present iff S is f.g.
// projective as a right A-module.  At most dim S pairs.
inline std::optional<DualBasis> dual_basis(const Bimodule& s) {
    const Field& f = s.field();
    DualModule ds = dual_module(s);
    std::size_t d = ds.functionals.size();
    if (s.dim == 0) return DualBasis{};
    if (d == 0) return std::nullopt;
    // unknown T in S (x) S*: operator E(T)(u) = sum e_j . f_k(u) T_{jk}
    const std::size_t adim = s.right->dim;
    std::vector<Mat> ops(s.dim * d, Mat(f, s.dim, s.dim));
    for (std::size_t j = 0; j < s.dim; ++j) {
        // Ract_j : A -> S, a -> e_j . a
        Mat Rj(f, s.dim, adim);
        for (std::size_t a = 0; a < adim; ++a) {
            Mat col = s.ract.col(j * adim + a);
            for (std::size_t r = 0; r < s.dim; ++r) Rj.at(r, a) = col.at(r, 0);
        }
        for (std::size_t k = 0; k < d; ++k) ops[j * d + k] = Rj * ds.functionals[k];
    }
    std::vector<std::function<Mat(const Mat&)>> conds = {[&](const Mat& t) {
        Mat acc(f, s.dim, s.dim);
        for (std::size_t j = 0; j < s.dim; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!f.is_zero(t.at(j, k))) acc = acc + ops[j * d + k].scaled(t.at(j, k));
        return acc;
    }};
    auto sol = matrix_affine_solve(f, s.dim, d, conds, {Mat::identity(f, s.dim)});
    if (!sol.particular) return std::nullopt;
    DualBasis db;
    for (std::size_t j = 0; j < s.dim; ++j) {
        Mat g(f, adim, s.dim);
        bool nonzero = false;
        for (std::size_t k = 0; k < d; ++k) {
            if (f.is_zero(sol.particular->at(j, k))) continue;
            g = g + ds.functionals[k].scaled(sol.particular->at(j, k));
            nonzero = true;
        }
        if (nonzero) db.pairs.push_back({Mat::basis_column(f, s.dim, j), g});
    }
    return db;
}

// left-side mirror: Hom_B(S, B) of left-B-linear functionals, and the left
// dual basis u = sum_j g_j(u) . e_j
inline std::optional<DualBasis> dual_basis_left(const Bimodule& s) {
    const Field& f = s.field();
    const Algebra& B = *s.left;
    std::vector<Mat> ls, lb;
    for (std::size_t u = 0; u < B.dim; ++u) {
        ls.push_back(s.left_op(u));
        lb.push_back(B.left_mult(B.basis(u)));
    }
    std::vector<std::function<Mat(const Mat&)>> conds;
    for (std::size_t u = 0; u < B.dim; ++u)
        conds.push_back([&, u](const Mat& x) { return x * ls[u] - lb[u] * x; });
    Subspace sol = matrix_solution_space(f, B.dim, s.dim, conds);
    std::size_t d = sol.dim();
    if (s.dim == 0) return DualBasis{};
    if (d == 0) return std::nullopt;
    std::vector<Mat> gs;
    for (std::size_t k = 0; k < d; ++k) gs.push_back(Mat::unvec(sol.basis.col(k), B.dim, s.dim));
    // E(T)(u) = sum_{j,k} T_{jk} g_k(u) . e_j
    std::vector<Mat> ops(s.dim * d, Mat(f, s.dim, s.dim));
    for (std::size_t j = 0; j < s.dim; ++j) {
        Mat Lj(f, s.dim, B.dim); // b -> b . e_j
        for (std::size_t b = 0; b < B.dim; ++b) {
            Mat col = s.lact.col(b * s.dim + j);
            for (std::size_t r = 0; r < s.dim; ++r) Lj.at(r, b) = col.at(r, 0);
        }
        for (std::size_t k = 0; k < d; ++k) ops[j * d + k] = Lj * gs[k];
    }
    std::vector<std::function<Mat(const Mat&)>> conds2 = {[&](const Mat& t) {
        Mat acc(f, s.dim, s.dim);
        for (std::size_t j = 0; j < s.dim; ++j)
            for (std::size_t k = 0; k < d; ++k)
                if (!f.is_zero(t.at(j, k))) acc = acc + ops[j * d + k].scaled(t.at(j, k));
        return acc;
    }};
    auto sol2 = matrix_affine_solve(f, s.dim, d, conds2, {Mat::identity(f, s.dim)});
    if (!sol2.particular) return std::nullopt;
    DualBasis db;
    for (std::size_t j = 0; j < s.dim; ++j) {
        Mat g(f, B.dim, s.dim);
        bool nonzero = false;
        for (std::size_t k = 0; k < d; ++k) {
            if (f.is_zero(sol2.particular->at(j, k))) continue;
            g = g + gs[k].scaled(sol2.particular->at(j, k));
            nonzero = true;
        }
        if (nonzero) db.pairs.push_back({Mat::basis_column(f, s.dim, j), g});
    }
    return db;
}

// trace ideal test: for S f.g. projective as a left B-module, S is a
// generator (equivalently faithfully flat) iff span{ g(u) } = B over all
// left-B-linear g : S -> B and u in S.  Throws when S is not left
// projective: the criterion is implemented only in that regime.
inline bool is_generator_left(const Bimodule& s) {
    if (!dual_basis_left(s)) throw std::domain_error("is_generator_left: module is not f.g. projective as a left module; generator test not decidable here");
    const Field& f = s.field();
    const Algebra& B = *s.left;
    std::vector<Mat> ls, lb;
    for (std::size_t u = 0; u < B.dim; ++u) {
        ls.push_back(s.left_op(u));
        lb.push_back(B.left_mult(B.basis(u)));
    }
    std::vector<std::function<Mat(const Mat&)>> conds;
    for (std::size_t u = 0; u < B.dim; ++u)
        conds.push_back([&, u](const Mat& x) { return x * ls[u] - lb[u] * x; });
    Subspace hom = matrix_solution_space(f, B.dim, s.dim, conds);
    Echelon trace(f, B.dim);
    for (std::size_t k = 0; k < hom.dim(); ++k) {
        Mat g = Mat::unvec(hom.basis.col(k), B.dim, s.dim);
        for (std::size_t j = 0; j < s.dim; ++j) trace.insert(g.col(j).transpose().row_vec(0));
    }
    return trace.rank() == B.dim;
}

} // namespace corings
