#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "nlie/linalg.hpp"

namespace nlie {

/// Endomorphisms act on coordinate column vectors.
using Endomorphism = Matrix;

using IndexTuple = std::vector<int>;

/// All strictly increasing k-tuples over {0, ..., dim-1}, lexicographic.
inline std::vector<IndexTuple> increasing_tuples(std::size_t dim, std::size_t k) {
    std::vector<IndexTuple> out;
    if (k > dim) return out;
    IndexTuple t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<int>(i);
    while (true) {
        out.push_back(t);
        std::size_t i = k;
        while (i-- > 0) {
            if (t[i] < static_cast<int>(dim - k + i)) {
                ++t[i];
                for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

/// Alternating multilinear map Lambda^arity(Q^dim) -> Q^dim, stored as
/// coefficient vectors on strictly increasing index tuples only. Evaluation
/// on arbitrary tuples expands by permutation sign and kills repeats, so the
/// alternating property holds by construction.
class BracketTensor {
public:
    BracketTensor() : arity_(0), dim_(0) {}
    BracketTensor(std::size_t arity, std::size_t dim) : arity_(arity), dim_(dim) {
        if (arity < 1) throw InternalError("bracket arity must be >= 1");
    }

    std::size_t arity() const { return arity_; }
    std::size_t dim() const { return dim_; }

    /// Assign the value on a strictly increasing tuple. Zero values erase.
    void set(const IndexTuple& tuple, Vec value) {
        check_increasing(tuple);
        if (value.size() != dim_) throw InternalError("tensor value: length mismatch");
        if (nlie::is_zero(value))
            entries_.erase(tuple);
        else
            entries_[tuple] = std::move(value);
    }

    /// Coefficient vector on an increasing tuple; nullptr when zero.
    const Vec* coeff(const IndexTuple& tuple) const {
        auto it = entries_.find(tuple);
        return it == entries_.end() ? nullptr : &it->second;
    }

    const std::map<IndexTuple, Vec>& entries() const { return entries_; }

    bool is_zero_map() const { return entries_.empty(); }

    /// Value on basis vectors in any order: sorts, tracks the permutation
    /// sign, returns zero on a repeated index.
    Vec eval_basis(IndexTuple tuple) const {
        if (tuple.size() != arity_) throw InternalError("eval_basis: arity mismatch");
        int sign = 1;
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            int x = tuple[i];
            std::size_t j = i;
            while (j > 0 && tuple[j - 1] > x) {
                tuple[j] = tuple[j - 1];
                --j;
                sign = -sign;
            }
            tuple[j] = x;
        }
        for (std::size_t i = 1; i < tuple.size(); ++i)
            if (tuple[i] == tuple[i - 1]) return Vec(dim_);
        const Vec* c = coeff(tuple);
        if (!c) return Vec(dim_);
        Vec v = *c;
        if (sign < 0)
            for (auto& x : v) x = -x;
        return v;
    }

    /// Full multilinear evaluation: for each stored tuple the alternating
    /// coefficient is the determinant of the argument slots at those indices.
    Vec eval(const std::vector<Vec>& args) const {
        if (args.size() != arity_) throw InternalError("eval: arity mismatch");
        for (const auto& a : args)
            if (a.size() != dim_) throw InternalError("eval: argument length mismatch");
        Vec out(dim_);
        Matrix slots(arity_, arity_);
        for (const auto& [tuple, value] : entries_) {
            for (std::size_t i = 0; i < arity_; ++i)
                for (std::size_t j = 0; j < arity_; ++j)
                    slots(i, j) = args[i][static_cast<std::size_t>(tuple[j])];
            Rational c = slots.determinant();
            if (!c.is_zero()) axpy(out, c, value);
        }
        return out;
    }

    friend bool operator==(const BracketTensor& a, const BracketTensor& b) {
        return a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

private:
    void check_increasing(const IndexTuple& t) const {
        if (t.size() != arity_) throw InternalError("tensor tuple: arity mismatch");
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] < 0 || t[i] >= static_cast<int>(dim_))
                throw InternalError("tensor tuple: index out of range");
            if (i > 0 && t[i] <= t[i - 1])
                throw InternalError("tensor tuple: not strictly increasing");
        }
    }

    std::size_t arity_, dim_;
    std::map<IndexTuple, Vec> entries_;
};

/// A vector space with an alternating n-bracket, n >= 2. Whether the
/// n-Jacobi identity actually holds is established by check_n_jacobi.
struct NLieAlgebra {
    BracketTensor tensor;

    NLieAlgebra() = default;
    NLieAlgebra(std::size_t n, std::size_t dim) : tensor(n, dim) {
        if (n < 2) throw InternalError("Lie n-algebra needs n >= 2");
    }
    explicit NLieAlgebra(BracketTensor t) : tensor(std::move(t)) {
        if (tensor.arity() < 2) throw InternalError("Lie n-algebra needs n >= 2");
    }

    std::size_t n() const { return tensor.arity(); }
    std::size_t dim() const { return tensor.dim(); }

    Vec bracket(const std::vector<Vec>& args) const { return tensor.eval(args); }
    Vec bracket_basis(const IndexTuple& tuple) const { return tensor.eval_basis(tuple); }

    friend bool operator==(const NLieAlgebra&, const NLieAlgebra&) = default;
};

/// Lie algebra (n = 2) presentation; used for the algebra of inner
/// derivations and the Killing-form test.
using LieAlgebraPresentation = NLieAlgebra;

/// Structure constants in the basis given by the rows of p (p invertible).
inline NLieAlgebra change_basis(const NLieAlgebra& a, const Matrix& p) {
    const std::size_t d = a.dim();
    if (p.rows() != d || p.cols() != d) throw InternalError("change_basis: shape mismatch");
    // coordinates of v in the row basis: x with p^T x = v
    Matrix pt = p.transpose();
    NLieAlgebra out(a.n(), d);
    std::vector<Vec> rows(d);
    for (std::size_t i = 0; i < d; ++i) rows[i] = p.row(i);
    for (const auto& tuple : increasing_tuples(d, a.n())) {
        std::vector<Vec> args;
        args.reserve(a.n());
        for (int idx : tuple) args.push_back(rows[static_cast<std::size_t>(idx)]);
        Vec v = a.bracket(args);
        if (nlie::is_zero(v)) continue;
        auto coords = solve(pt, v);
        if (!coords) throw InternalError("change_basis: matrix not invertible");
        out.tensor.set(tuple, *coords);
    }
    return out;
}

/// Restriction of the bracket to a subspace that is closed under it.
/// Coordinates are taken in the subspace's canonical basis.
inline NLieAlgebra restrict_algebra(const NLieAlgebra& a, const Subspace& s) {
    const std::size_t k = s.dim();
    if (s.ambient() != a.dim()) throw InternalError("restrict_algebra: ambient mismatch");
    if (k < 1) throw InternalError("restrict_algebra: zero subspace");
    NLieAlgebra out(a.n(), k);
    if (k < a.n()) return out;
    std::vector<Vec> rows(k);
    for (std::size_t i = 0; i < k; ++i) rows[i] = s.basis().row(i);
    for (const auto& tuple : increasing_tuples(k, a.n())) {
        std::vector<Vec> args;
        args.reserve(a.n());
        for (int idx : tuple) args.push_back(rows[static_cast<std::size_t>(idx)]);
        Vec v = a.bracket(args);
        auto coords = s.coordinates(v);
        if (!coords) throw InternalError("restrict_algebra: subspace not closed under bracket");
        out.tensor.set(tuple, *coords);
    }
    return out;
}

/// Linear projection V -> V/I in pivot-complement coordinates: quotient
/// coordinates are read at the non-pivot columns after reducing mod I.
struct QuotientAlgebra {
    NLieAlgebra algebra;
    Matrix projection; // (dim V - dim I) x dim V
};

inline QuotientAlgebra quotient_algebra(const NLieAlgebra& a, const Subspace& ideal) {
    const std::size_t d = a.dim();
    if (ideal.ambient() != d) throw InternalError("quotient_algebra: ambient mismatch");
    const std::size_t q = d - ideal.dim();
    if (q == 0) throw InternalError("quotient_algebra: quotient by the full space");
    std::vector<bool> is_pivot(d, false);
    for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
    std::vector<std::size_t> reps; // non-pivot coordinate indices
    for (std::size_t j = 0; j < d; ++j)
        if (!is_pivot[j]) reps.push_back(j);

    // projection of x: reduce mod I, then read entries at rep indices
    Matrix proj(q, d);
    for (std::size_t col = 0; col < d; ++col) {
        Vec e(d);
        e[col] = Rational(1);
        Vec r = ideal.reduce(std::move(e));
        for (std::size_t i = 0; i < q; ++i) proj(i, col) = r[reps[i]];
    }

    NLieAlgebra out(a.n(), q);
    if (q >= a.n()) {
        for (const auto& tuple : increasing_tuples(q, a.n())) {
            std::vector<Vec> args;
            args.reserve(a.n());
            for (int idx : tuple) {
                Vec e(d);
                e[reps[static_cast<std::size_t>(idx)]] = Rational(1);
                args.push_back(std::move(e));
            }
            Vec v = a.bracket(args);
            Vec image = proj * v;
            out.tensor.set(tuple, std::move(image));
        }
    }
    return {std::move(out), std::move(proj)};
}

} // namespace nlie
