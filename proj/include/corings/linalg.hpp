#pragma once

// Reduced echelon machinery with a fixed pivot rule (first nonzero column,
// rows kept sorted by pivot), so every derived basis is canonical: two equal
// subspaces produce bit-identical basis matrices.

#include "corings/matrix.hpp"

#include <functional>
#include <optional>

namespace corings {

// Incrementally maintained reduced row echelon basis of a row space.
class Echelon {
  public:
    Echelon(Field f, std::size_t cols) : f_(f), cols_(cols) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // reduce a row against the basis in place; returns first nonzero column or npos
    std::size_t reduce(std::vector<Rat>& row) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rat& c = row[pivots_[k]];
            if (f_.is_zero(c)) continue;
            Rat fac = c;
            const auto& er = rows_[k];
            for (std::size_t j = 0; j < cols_; ++j)
                if (!f_.is_zero(er[j])) row[j] = f_.sub(row[j], f_.mul(fac, er[j]));
        }
        for (std::size_t j = 0; j < cols_; ++j)
            if (!f_.is_zero(row[j])) return j;
        return npos;
    }

    // returns true if the row enlarged the space
    bool insert(std::vector<Rat> row) {
        std::size_t p = reduce(row);
        if (p == npos) return false;
        Rat inv = f_.inv(row[p]);
        for (std::size_t j = p; j < cols_; ++j)
            if (!f_.is_zero(row[j])) row[j] = f_.mul(row[j], inv);
        // eliminate the new pivot from existing rows
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Rat c = rows_[k][p];
            if (f_.is_zero(c)) continue;
            for (std::size_t j = p; j < cols_; ++j)
                if (!f_.is_zero(row[j])) rows_[k][j] = f_.sub(rows_[k][j], f_.mul(c, row[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

    void insert_mat_rows(const Mat& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) insert(m.row_vec(i));
    }
    void insert_mat_cols(const Mat& m) {
        for (std::size_t j = 0; j < m.cols(); ++j) insert(m.col(j).transpose().row_vec(0));
    }

    bool contains_row(std::vector<Rat> row) const { return reduce(row) == npos; }

    Mat to_mat() const {
        Mat m(f_, rows_.size(), cols_);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = rows_[i][j];
        return m;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  private:
    Field f_;
    std::size_t cols_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> pivots_;
};

inline Mat rref(const Mat& m, std::vector<std::size_t>* pivots_out = nullptr) {
    Echelon e(m.field(), m.cols());
    e.insert_mat_rows(m);
    if (pivots_out) *pivots_out = e.pivots();
    return e.to_mat();
}

inline std::size_t rank(const Mat& m) {
    Echelon e(m.field(), m.cols());
    e.insert_mat_rows(m);
    return e.rank();
}

inline bool is_bijective(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

// Subspace of k^ambient; basis columns are the canonical reduced echelon
// basis (pivots strictly increasing), so operator== is plain matrix equality.
struct Subspace {
    std::size_t ambient = 0;
    Mat basis; // ambient x dim
    std::vector<std::size_t> pivots;

    std::size_t dim() const { return basis.cols(); }
    const Field& field() const { return basis.field(); }

    static Subspace from_echelon(std::size_t ambient, const Echelon& e) {
        Subspace s;
        s.ambient = ambient;
        s.basis = e.to_mat().transpose();
        s.pivots = e.pivots();
        return s;
    }

    // generators given as columns
    static Subspace from_columns(const Mat& gens) {
        Echelon e(gens.field(), gens.rows());
        e.insert_mat_cols(gens);
        return from_echelon(gens.rows(), e);
    }

    static Subspace zero(Field f, std::size_t ambient) {
        Echelon e(f, ambient);
        return from_echelon(ambient, e);
    }

    static Subspace full(Field f, std::size_t ambient) {
        Echelon e(f, ambient);
        e.insert_mat_rows(Mat::identity(f, ambient));
        return from_echelon(ambient, e);
    }

    bool contains(const Mat& v) const {
        Echelon e(basis.field(), ambient);
        e.insert_mat_cols(basis);
        for (std::size_t j = 0; j < v.cols(); ++j)
            if (!e.contains_row(v.col(j).transpose().row_vec(0))) return false;
        return true;
    }

    // coordinates of column(s) v in the basis; throws if not a member
    Mat coords(const Mat& v) const;

    bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
};

// basis of { v : m v = 0 }, canonical
inline Subspace kernel(const Mat& m) {
    std::vector<std::size_t> piv;
    Mat r = rref(m, &piv);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    Echelon e(m.field(), m.cols());
    const Field& f = m.field();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_piv[j]) continue;
        std::vector<Rat> v(m.cols(), f.zero());
        v[j] = f.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = f.neg(r.at(i, j));
        e.insert(std::move(v));
    }
    return Subspace::from_echelon(m.cols(), e);
}

// any X with m X = rhs (free variables set to zero), or nullopt
inline std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve: rhs row mismatch");
    std::vector<std::size_t> piv;
    Mat r = rref(Mat::hstack(m, rhs), &piv);
    const Field& f = m.field();
    Mat x(f, m.cols(), rhs.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) {
        if (piv[i] >= m.cols()) return std::nullopt; // pivot in rhs block: inconsistent
        for (std::size_t j = 0; j < rhs.cols(); ++j) x.at(piv[i], j) = r.at(i, m.cols() + j);
    }
    return x;
}

inline Mat Subspace::coords(const Mat& v) const {
    auto x = solve(basis, v);
    if (!x) throw std::domain_error("Subspace::coords: vector not in subspace");
    return *x;
}

// proj : k^ambient -> k^(ambient - dim rel) with kernel(proj) = rel, and a
// section with proj*sect = id.  Quotient basis = non-pivot coordinates of
// rel's echelon basis.
inline std::pair<Mat, Mat> quotient_maps(std::size_t ambient, const Subspace& rel) {
    if (rel.ambient != ambient) throw std::invalid_argument("quotient_maps: ambient mismatch");
    const Field& f = rel.field();
    std::vector<bool> is_piv(ambient, false);
    for (auto p : rel.pivots) is_piv[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < ambient; ++j)
        if (!is_piv[j]) free.push_back(j);
    Mat proj(f, free.size(), ambient), sect(f, ambient, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        proj.at(k, free[k]) = f.one();
        sect.at(free[k], k) = f.one();
    }
    // subtract the unique relation combination matching the pivot coordinates
    for (std::size_t i = 0; i < rel.pivots.size(); ++i)
        for (std::size_t k = 0; k < free.size(); ++k) proj.at(k, rel.pivots[i]) = f.neg(rel.basis.at(free[k], i));
    return {proj, sect};
}

// Solution space of simultaneous homogeneous linear conditions on an r x c
// matrix X; each condition evaluates a residual that is linear in X.
// Solutions are vec'd row-major into k^(r*c).
inline Subspace matrix_solution_space(const Field& f, std::size_t r, std::size_t c,
                                      const std::vector<std::function<Mat(const Mat&)>>& conds) {
    std::size_t nuk = r * c;
    std::vector<Mat> cols;
    cols.reserve(nuk);
    std::size_t total_rows = 0;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Mat e(f, r, c);
            e.at(i, j) = f.one();
            Mat stacked(f, 0, 1);
            bool first = true;
            for (const auto& cond : conds) {
                Mat res = cond(e).vec();
                stacked = first ? res : Mat::vstack(stacked, res);
                first = false;
            }
            total_rows = stacked.rows();
            cols.push_back(stacked);
        }
    Mat sys(f, total_rows, nuk);
    for (std::size_t jj = 0; jj < nuk; ++jj)
        for (std::size_t ii = 0; ii < total_rows; ++ii) sys.at(ii, jj) = cols[jj].at(ii, 0);
    return kernel(sys);
}

// Particular r x c solution of conds(X) = rhs (echelon particular solution),
// together with the homogeneous solution space.
struct AffineSolution {
    std::optional<Mat> particular;
    Subspace homogeneous;
};

inline AffineSolution matrix_affine_solve(const Field& f, std::size_t r, std::size_t c,
                                          const std::vector<std::function<Mat(const Mat&)>>& conds,
                                          const std::vector<Mat>& rhs) {
    std::size_t nuk = r * c;
    std::vector<Mat> cols;
    cols.reserve(nuk);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            Mat e(f, r, c);
            e.at(i, j) = f.one();
            Mat stacked(f, 0, 1);
            bool first = true;
            for (const auto& cond : conds) {
                Mat res = cond(e).vec();
                stacked = first ? res : Mat::vstack(stacked, res);
                first = false;
            }
            cols.push_back(stacked);
        }
    Mat b(f, 0, 1);
    bool first = true;
    for (const auto& m : rhs) {
        b = first ? m.vec() : Mat::vstack(b, m.vec());
        first = false;
    }
    Mat sys(f, b.rows(), nuk);
    for (std::size_t jj = 0; jj < nuk; ++jj)
        for (std::size_t ii = 0; ii < sys.rows(); ++ii) sys.at(ii, jj) = cols[jj].at(ii, 0);
    AffineSolution out;
    out.homogeneous = kernel(sys);
    if (auto x = solve(sys, b)) out.particular = Mat::unvec(*x, r, c);
    return out;
}

} // namespace corings
