#pragma once

// Brute-force reference implementations for cross-checking: kernels by
// iterated single-row elimination (no echelon forms, no canonical bases),
// span dimensions by greedy membership, quotient relations by naive
// generator enumeration.  Everything here is deliberately independent of
// the production linalg path.

#include <corings/bimodule.hpp>

namespace oracle {

using corings::Bimodule;
using corings::Field;
using corings::Mat;
using corings::Rat;

// kernel of a single row vector (1 x n); columns span { v : r v = 0 }
inline Mat row_kernel(const Mat& r) {
    const Field& f = r.field();
    std::size_t n = r.cols();
    std::size_t t = n;
    for (std::size_t j = 0; j < n; ++j)
        if (!f.is_zero(r.at(0, j))) { t = j; break; }
    if (t == n) return Mat::identity(f, n);
    Mat basis(f, n, n - 1);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == t) continue;
        basis.at(j, col) = f.one();
        basis.at(t, col) = f.neg(f.div(r.at(0, j), r.at(0, t)));
        ++col;
    }
    return basis;
}

// kernel of m by intersecting row kernels; basis columns, not canonical
inline Mat kernel_cols(const Mat& m) {
    const Field& f = m.field();
    Mat basis = Mat::identity(f, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Mat row(f, 1, m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row.at(0, j) = m.at(i, j);
        Mat c = row * basis;
        basis = basis * row_kernel(c);
        if (basis.cols() == 0) break;
    }
    return basis;
}

// v in column span of S?
inline bool in_span(const Mat& S, const Mat& v) {
    if (v.is_zero()) return true;
    if (S.cols() == 0) return false;
    Mat k = kernel_cols(Mat::hstack(S, v));
    const Field& f = S.field();
    for (std::size_t c = 0; c < k.cols(); ++c)
        if (!f.is_zero(k.at(S.cols(), c))) return true;
    return false;
}

// greedy maximal independent subset of the columns
inline Mat independent_cols(const Mat& S) {
    const Field& f = S.field();
    Mat acc(f, S.rows(), 0);
    for (std::size_t c = 0; c < S.cols(); ++c) {
        Mat v = S.col(c);
        if (!in_span(acc, v)) acc = Mat::hstack(acc, v);
    }
    return acc;
}

inline std::size_t dim_span(const Mat& S) { return independent_cols(S).cols(); }

// same column span?
inline bool same_span(const Mat& A, const Mat& B) {
    for (std::size_t c = 0; c < A.cols(); ++c)
        if (!in_span(B, A.col(c))) return false;
    for (std::size_t c = 0; c < B.cols(); ++c)
        if (!in_span(A, B.col(c))) return false;
    return true;
}

// naive middle-action relation generators of m (x)_B n, as columns in the
// flat tensor space
inline Mat tensor_relation_gens(const Bimodule& m, const Bimodule& n) {
    const Field& f = m.field();
    std::size_t bd = m.right->dim;
    std::size_t flat = m.dim * n.dim;
    Mat gens(f, flat, m.dim * bd * n.dim);
    std::size_t col = 0;
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t u = 0; u < bd; ++u) {
            Mat mb = m.ract.col(i * bd + u);
            for (std::size_t j = 0; j < n.dim; ++j) {
                Mat bn = n.lact.col(u * n.dim + j);
                for (std::size_t r = 0; r < m.dim; ++r) gens.at(r * n.dim + j, col) = mb.at(r, 0);
                for (std::size_t r = 0; r < n.dim; ++r)
                    gens.at(i * n.dim + r, col) = f.sub(gens.at(i * n.dim + r, col), bn.at(r, 0));
                ++col;
            }
        }
    return gens;
}

// basis of { x : D x in colspan(R) }
inline Mat preimage_cols(const Mat& D, const Mat& R) {
    const Field& f = D.field();
    Mat aug = R.cols() ? Mat::hstack(D, -R) : D;
    Mat k = kernel_cols(aug);
    Mat first(f, D.cols(), k.cols());
    for (std::size_t c = 0; c < k.cols(); ++c)
        for (std::size_t r = 0; r < D.cols(); ++r) first.at(r, c) = k.at(r, c);
    return independent_cols(first);
}

} // namespace oracle
