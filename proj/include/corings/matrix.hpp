#pragma once

// Dense exact matrices, row-major, column-vector convention: a linear map
// V -> W is a dim(W) x dim(V) matrix and composition is matrix product.
// Kronecker products follow the left-major flat index (i,j) -> i*cols2 + j,
// which is the tensor basis order used everywhere in the library.

#include "corings/field.hpp"

#include <initializer_list>
#include <sstream>
#include <vector>

namespace corings {

class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}

    Mat(Field f, std::size_t r, std::size_t c) : f_(f), rows_(r), cols_(c), e_(r * c, f.zero()) {}

    static Mat identity(Field f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
        return m;
    }

    static Mat zero(Field f, std::size_t r, std::size_t c) { return Mat(f, r, c); }

    static Mat from_rows(Field f, std::initializer_list<std::initializer_list<const char*>> rows) {
        std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
        Mat m(f, r, c);
        std::size_t i = 0;
        for (auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("Mat::from_rows: ragged rows");
            std::size_t j = 0;
            for (auto* s : row) m.at(i, j++) = f.parse(s);
            ++i;
        }
        return m;
    }

    static Mat from_int_rows(Field f, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
        Mat m(f, r, c);
        std::size_t i = 0;
        for (auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("Mat::from_int_rows: ragged rows");
            std::size_t j = 0;
            for (auto v : row) m.at(i, j++) = f.from_int(v);
            ++i;
        }
        return m;
    }

    static Mat column(Field f, std::initializer_list<long long> entries) {
        Mat m(f, entries.size(), 1);
        std::size_t i = 0;
        for (auto v : entries) m.at(i++, 0) = f.from_int(v);
        return m;
    }

    static Mat basis_column(Field f, std::size_t n, std::size_t i) {
        Mat m(f, n, 1);
        m.at(i, 0) = f.one();
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero_at(std::size_t i, std::size_t j) const { return f_.is_zero(at(i, j)); }

    Mat operator*(const Mat& o) const {
        check_field(o);
        if (cols_ != o.rows_) throw std::invalid_argument("Mat::mul: dimension mismatch");
        Mat r(f_, rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rat& a = at(i, k);
                if (f_.is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Rat& b = o.at(k, j);
                    if (f_.is_zero(b)) continue;
                    r.at(i, j) = f_.add(r.at(i, j), f_.mul(a, b));
                }
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.add(e_[i], o.e_[i]);
        return r;
    }

    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.sub(e_[i], o.e_[i]);
        return r;
    }

    Mat operator-() const {
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.neg(e_[i]);
        return r;
    }

    Mat scaled(const Rat& s) const {
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = f_.mul(e_[i], s);
        return r;
    }

    Mat transpose() const {
        Mat r(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    static Mat kron(const Mat& a, const Mat& b) {
        a.check_field(b);
        Mat r(a.f_, a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
            for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
                const Rat& x = a.at(i1, j1);
                if (a.f_.is_zero(x)) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2) {
                        const Rat& y = b.at(i2, j2);
                        if (a.f_.is_zero(y)) continue;
                        r.at(i1 * b.rows_ + i2, j1 * b.cols_ + j2) = a.f_.mul(x, y);
                    }
            }
        return r;
    }

    static Mat hstack(const Mat& a, const Mat& b) {
        a.check_field(b);
        if (a.rows_ != b.rows_) throw std::invalid_argument("Mat::hstack: row mismatch");
        Mat r(a.f_, a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Mat vstack(const Mat& a, const Mat& b) {
        a.check_field(b);
        if (a.cols_ != b.cols_) throw std::invalid_argument("Mat::vstack: col mismatch");
        Mat r(a.f_, a.rows_ + b.rows_, a.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    Mat col(std::size_t j) const {
        Mat r(f_, rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    std::vector<Rat> row_vec(std::size_t i) const {
        return std::vector<Rat>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!f_.is_zero(x)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!f_.eq(at(i, j), i == j ? f_.one() : f_.zero())) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_) return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (!f_.eq(e_[i], o.e_[i])) return false;
        return true;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // flatten column-stacked by rows: vec(X)[i*cols + j] = X(i,j)
    Mat vec() const {
        Mat r(f_, rows_ * cols_, 1);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i];
        return r;
    }

    static Mat unvec(const Mat& v, std::size_t r, std::size_t c) {
        if (v.cols() != 1 || v.rows() != r * c) throw std::invalid_argument("Mat::unvec: size mismatch");
        Mat m(v.field(), r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = v.at(i * c + j, 0);
        return m;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << f_.str(at(i, j));
            os << "]";
        }
        os << "]";
        return os.str();
    }

  private:
    void check_field(const Mat& o) const {
        if (f_ != o.f_) throw std::invalid_argument("Mat: mixed fields");
    }
    void check_same_shape(const Mat& o) const {
        check_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat: shape mismatch");
    }

    Field f_;
    std::size_t rows_, cols_;
    std::vector<Rat> e_;
};

} // namespace corings
