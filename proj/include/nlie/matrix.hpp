#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "nlie/errors.hpp"
#include "nlie/rational.hpp"

namespace nlie {

using Vec = std::vector<Rational>;

inline Rational dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw InternalError("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

/// v += c * w
inline void axpy(Vec& v, const Rational& c, const Vec& w) {
    if (v.size() != w.size()) throw InternalError("axpy: length mismatch");
    if (c.is_zero()) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        e_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw InternalError("ragged matrix literal");
            e_.insert(e_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) throw InternalError("from_rows: length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return e_[i * cols_ + j];
    }

    Vec row(std::size_t i) const {
        return Vec(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }
    Vec col(std::size_t j) const {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    Rational trace() const {
        if (rows_ != cols_) throw InternalError("trace of non-square matrix");
        Rational t;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InternalError("matrix sum: shape mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw InternalError("matrix difference: shape mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
        return r;
    }
    friend Matrix operator*(const Rational& c, Matrix m) {
        for (auto& x : m.e_) x *= c;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw InternalError("matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    r(i, j) += aik * b(k, j);
            }
        return r;
    }
    /// Matrix-vector product (v as column).
    friend Vec operator*(const Matrix& a, const Vec& v) {
        if (a.cols_ != v.size()) throw InternalError("matrix*vector: shape mismatch");
        Vec r(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * v[j];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    /// Row-major flattening, used for treating endomorphisms as vectors.
    Vec vectorized() const { return e_; }

    static Matrix from_vectorized(const Vec& v, std::size_t rows, std::size_t cols) {
        if (v.size() != rows * cols) throw InternalError("from_vectorized: size mismatch");
        Matrix m(rows, cols);
        m.e_ = v;
        return m;
    }

    /// Fraction-free-ish determinant via Gaussian elimination.
    Rational determinant() const {
        if (rows_ != cols_) throw InternalError("determinant of non-square matrix");
        Matrix m = *this;
        Rational det(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t p = c;
            while (p < rows_ && m(p, c).is_zero()) ++p;
            if (p == rows_) return Rational(0);
            if (p != c) {
                m.swap_rows(p, c);
                det = -det;
            }
            det *= m(c, c);
            Rational inv = Rational(1) / m(c, c);
            for (std::size_t r = c + 1; r < rows_; ++r) {
                if (m(r, c).is_zero()) continue;
                Rational f = m(r, c) * inv;
                for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
            }
        }
        return det;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? " " : "") << m(i, j);
            os << (i + 1 == m.rows_ ? "]" : "\n");
        }
        return os;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

} // namespace nlie
