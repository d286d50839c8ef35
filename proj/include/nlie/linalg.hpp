#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "nlie/matrix.hpp"

namespace nlie {

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots; // strictly increasing pivot column indices
    std::size_t rank = 0;
};

/// Unique reduced row-echelon form: pivot entries 1, zeros above and below,
/// pivot columns strictly increasing. Zero rows sink to the bottom.
inline RrefResult rref(Matrix m) {
    RrefResult res;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        m.swap_rows(p, r);
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = std::move(m);
    return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// One solution of a*x = rhs with free variables set to zero,
/// or nullopt when the system is inconsistent.
inline std::optional<Vec> solve(const Matrix& a, const Vec& rhs) {
    if (a.rows() != rhs.size()) throw InternalError("solve: shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = rhs[i];
    }
    RrefResult rr = rref(std::move(aug));
    if (!rr.pivots.empty() && rr.pivots.back() == a.cols()) return std::nullopt;
    Vec x(a.cols());
    for (std::size_t k = 0; k < rr.pivots.size(); ++k)
        x[rr.pivots[k]] = rr.reduced(k, a.cols());
    return x;
}

/// Subspace of Q^ambient in canonical form: the stored basis is the RREF of
/// any spanning set, so two values are equal iff they are entry-wise equal.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    static Subspace zero(std::size_t ambient) {
        Subspace s;
        s.ambient_ = ambient;
        s.basis_ = Matrix(0, ambient);
        return s;
    }

    static Subspace full(std::size_t ambient) {
        return from_matrix_rows(Matrix::identity(ambient));
    }

    static Subspace from_matrix_rows(const Matrix& rows) {
        Subspace s;
        s.ambient_ = rows.cols();
        RrefResult rr = rref(rows);
        Matrix b(rr.rank, rows.cols());
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < rows.cols(); ++j) b(i, j) = rr.reduced(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = std::move(rr.pivots);
        return s;
    }

    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors) {
        return from_matrix_rows(Matrix::from_rows(vectors, ambient));
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Residual of v after elimination against the basis; zero iff v lies here.
    Vec reduce(Vec v) const {
        if (v.size() != ambient_) throw InternalError("reduce: ambient mismatch");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            const Rational& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            Rational f = c;
            for (std::size_t j = pivots_[i]; j < ambient_; ++j)
                v[j] -= f * basis_(i, j);
        }
        return v;
    }

    bool contains(const Vec& v) const { return nlie::is_zero(reduce(v)); }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) return false;
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// Coordinates of v in the stored basis (reads pivot columns), or nullopt
    /// when v is not in the subspace.
    std::optional<Vec> coordinates(const Vec& v) const {
        if (!contains(v)) return std::nullopt;
        Vec c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    /// The vector with the given basis coordinates.
    Vec from_coordinates(const Vec& coords) const {
        if (coords.size() != dim()) throw InternalError("from_coordinates: size mismatch");
        Vec v(ambient_);
        for (std::size_t i = 0; i < dim(); ++i) axpy(v, coords[i], basis_.row(i));
        return v;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    /// Lexicographic order on (dim, basis entries); a deterministic tiebreak
    /// for search routines, not meaningful geometrically.
    friend bool operator<(const Subspace& a, const Subspace& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.ambient_; ++j) {
                if (a.basis_(i, j) != b.basis_(i, j))
                    return a.basis_(i, j) < b.basis_(i, j);
            }
        return false;
    }

private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// Null space of m as a canonical subspace of Q^cols.
inline Subspace kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rational(1);
        for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), basis);
}

/// Basis of the annihilator {c : v . c = 0 for all v in s}.
inline Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

inline Subspace span_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw InternalError("span_sum: ambient mismatch");
    Matrix stacked(a.dim() + b.dim(), a.ambient());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j) stacked(i, j) = a.basis()(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j)
            stacked(a.dim() + i, j) = b.basis()(i, j);
    return Subspace::from_matrix_rows(stacked);
}

inline Subspace span_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw InternalError("span_intersect: ambient mismatch");
    Subspace ann_a = annihilator(a), ann_b = annihilator(b);
    Matrix constraints(ann_a.dim() + ann_b.dim(), a.ambient());
    for (std::size_t i = 0; i < ann_a.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j)
            constraints(i, j) = ann_a.basis()(i, j);
    for (std::size_t i = 0; i < ann_b.dim(); ++i)
        for (std::size_t j = 0; j < a.ambient(); ++j)
            constraints(ann_a.dim() + i, j) = ann_b.basis()(i, j);
    return kernel(constraints);
}

} // namespace nlie
