#pragma once

// Finite-dimensional unital associative algebras by structure constants.
// mult is the multiplication as a linear map A (x) A -> A on flat tensor
// coordinates (i major, j minor), unit the coordinate vector of 1.

#include "corings/linalg.hpp"
#include "corings/report.hpp"

#include <memory>

namespace corings {

struct Algebra {
    Field f;
    std::size_t dim = 0;
    Mat mult; // dim x dim^2
    Mat unit; // dim x 1
    std::string name; // for diagnostics only

    // operator x -> a*x
    Mat left_mult(const Mat& a) const {
        Mat r(f, dim, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (f.is_zero(a.at(i, 0))) continue;
            for (std::size_t rr = 0; rr < dim; ++rr)
                for (std::size_t j = 0; j < dim; ++j)
                    r.at(rr, j) = f.add(r.at(rr, j), f.mul(a.at(i, 0), mult.at(rr, i * dim + j)));
        }
        return r;
    }

    // operator x -> x*b
    Mat right_mult(const Mat& b) const {
        Mat r(f, dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            if (f.is_zero(b.at(j, 0))) continue;
            for (std::size_t rr = 0; rr < dim; ++rr)
                for (std::size_t i = 0; i < dim; ++i)
                    r.at(rr, i) = f.add(r.at(rr, i), f.mul(b.at(j, 0), mult.at(rr, i * dim + j)));
        }
        return r;
    }

    Mat basis(std::size_t i) const { return Mat::basis_column(f, dim, i); }

    bool operator==(const Algebra& o) const { return f == o.f && dim == o.dim && mult == o.mult && unit == o.unit; }
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

inline CheckReport check_algebra(const Algebra& a) {
    CheckReport rep;
    if (a.mult.rows() != a.dim || a.mult.cols() != a.dim * a.dim) {
        rep.fail("mult tensor has wrong shape");
        return rep;
    }
    if (a.unit.rows() != a.dim || a.unit.cols() != 1) {
        rep.fail("unit vector has wrong shape");
        return rep;
    }
    const Field& f = a.f;
    Mat id = Mat::identity(f, a.dim);
    // associativity: mult(mult (x) id) = mult(id (x) mult) on A (x) A (x) A
    Mat lhs = a.mult * Mat::kron(a.mult, id);
    Mat rhs = a.mult * Mat::kron(id, a.mult);
    if (lhs != rhs) {
        int found = 0;
        for (std::size_t i = 0; i < a.dim && found < 3; ++i)
            for (std::size_t j = 0; j < a.dim && found < 3; ++j)
                for (std::size_t k = 0; k < a.dim && found < 3; ++k) {
                    std::size_t col = (i * a.dim + j) * a.dim + k;
                    if (lhs.col(col) != rhs.col(col)) {
                        rep.fail("associativity fails at basis triple (" + std::to_string(i) + "," + std::to_string(j) +
                                 "," + std::to_string(k) + "): (bi*bj)*bk = " + lhs.col(col).transpose().str() +
                                 ", bi*(bj*bk) = " + rhs.col(col).transpose().str());
                        ++found;
                    }
                }
    }
    Mat lu = a.mult * Mat::kron(a.unit, id);
    Mat ru = a.mult * Mat::kron(id, a.unit);
    for (std::size_t j = 0; j < a.dim; ++j) {
        if (lu.col(j) != id.col(j)) {
            rep.fail("left unit fails at basis element " + std::to_string(j) + ": 1*b = " + lu.col(j).transpose().str());
            break;
        }
    }
    for (std::size_t j = 0; j < a.dim; ++j) {
        if (ru.col(j) != id.col(j)) {
            rep.fail("right unit fails at basis element " + std::to_string(j) + ": b*1 = " + ru.col(j).transpose().str());
            break;
        }
    }
    return rep;
}

inline AlgebraPtr make_algebra(Field f, std::size_t dim, Mat mult, Mat unit, std::string name = "",
                               bool validate = true) {
    auto a = std::make_shared<Algebra>(Algebra{f, dim, std::move(mult), std::move(unit), std::move(name)});
    if (validate) {
        auto rep = check_algebra(*a);
        if (!rep.ok()) throw std::invalid_argument("make_algebra(" + a->name + "): " + rep.str());
    }
    return a;
}

// the ground field as a one-dimensional algebra
inline AlgebraPtr ground_algebra(Field f) {
    Mat mult(f, 1, 1);
    mult.at(0, 0) = f.one();
    return make_algebra(f, 1, mult, Mat::identity(f, 1), "k", false);
}

// full matrix algebra M_n(k), basis e_{rc} flat index r*n + c
inline AlgebraPtr matrix_algebra(Field f, std::size_t n) {
    std::size_t d = n * n;
    Mat mult(f, d, d * d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r2 = 0; r2 < n; ++r2)
                for (std::size_t c2 = 0; c2 < n; ++c2)
                    if (c == r2) mult.at(r * n + c2, (r * n + c) * d + (r2 * n + c2)) = f.one();
    Mat unit(f, d, 1);
    for (std::size_t r = 0; r < n; ++r) unit.at(r * n + r, 0) = f.one();
    return make_algebra(f, d, mult, unit, "M" + std::to_string(n), false);
}

// k[x]/(x^2 - c): basis {1, x}; c = 2 models Q(sqrt 2), c = 1 is kZ/2, c = 0 is k[x]/x^2
inline AlgebraPtr x2_quotient_algebra(Field f, const Rat& c, std::string name = "") {
    Mat mult(f, 2, 4);
    mult.at(0, 0) = f.one();          // 1*1
    mult.at(1, 1) = f.one();          // 1*x
    mult.at(1, 2) = f.one();          // x*1
    mult.at(0, 3) = f.reduce(c);      // x*x = c
    Mat unit(f, 2, 1);
    unit.at(0, 0) = f.one();
    return make_algebra(f, 2, mult, unit, name.empty() ? "k[x]/(x^2-" + f.str(c) + ")" : name, false);
}

// group algebra of Z/n, basis g^0..g^{n-1}
inline AlgebraPtr cyclic_group_algebra(Field f, std::size_t n) {
    Mat mult(f, n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mult.at((i + j) % n, i * n + j) = f.one();
    Mat unit(f, n, 1);
    unit.at(0, 0) = f.one();
    return make_algebra(f, n, mult, unit, "kZ" + std::to_string(n), false);
}

inline AlgebraPtr product_algebra(const Algebra& a, const Algebra& b) {
    const Field& f = a.f;
    std::size_t d = a.dim + b.dim;
    Mat mult(f, d, d * d);
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            for (std::size_t r = 0; r < a.dim; ++r) mult.at(r, i * d + j) = a.mult.at(r, i * a.dim + j);
    for (std::size_t i = 0; i < b.dim; ++i)
        for (std::size_t j = 0; j < b.dim; ++j)
            for (std::size_t r = 0; r < b.dim; ++r)
                mult.at(a.dim + r, (a.dim + i) * d + (a.dim + j)) = b.mult.at(r, i * b.dim + j);
    Mat unit(f, d, 1);
    for (std::size_t r = 0; r < a.dim; ++r) unit.at(r, 0) = a.unit.at(r, 0);
    for (std::size_t r = 0; r < b.dim; ++r) unit.at(a.dim + r, 0) = b.unit.at(r, 0);
    return make_algebra(f, d, mult, unit, a.name + "x" + b.name, false);
}

// upper triangular n x n matrices; basis e_{rc} for r <= c, ordered row-major
inline AlgebraPtr upper_triangular_algebra(Field f, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> bas;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) bas.push_back({r, c});
    std::size_t d = bas.size();
    auto idx = [&](std::size_t r, std::size_t c) {
        for (std::size_t k = 0; k < d; ++k)
            if (bas[k].first == r && bas[k].second == c) return k;
        return static_cast<std::size_t>(-1);
    };
    Mat mult(f, d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (bas[i].second == bas[j].first) mult.at(idx(bas[i].first, bas[j].second), i * d + j) = f.one();
    Mat unit(f, d, 1);
    for (std::size_t r = 0; r < n; ++r) unit.at(idx(r, r), 0) = f.one();
    return make_algebra(f, d, mult, unit, "UT" + std::to_string(n), false);
}

} // namespace corings
