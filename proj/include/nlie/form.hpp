#pragma once

#include <vector>

#include "nlie/linalg.hpp"

namespace nlie {

/// Inertia triple of a symmetric form: positive, negative and null counts.
struct Signature {
    std::size_t pos = 0, neg = 0, zero = 0;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend Signature operator+(const Signature& a, const Signature& b) {
        return {a.pos + b.pos, a.neg + b.neg, a.zero + b.zero};
    }
};

/// Symmetric bilinear form on Q^dim given by its Gram matrix.
class SymmetricForm {
public:
    SymmetricForm() = default;

    explicit SymmetricForm(Matrix gram) : gram_(std::move(gram)) {
        if (!gram_.is_symmetric())
            throw InternalError("SymmetricForm: matrix is not symmetric");
    }

    static SymmetricForm diagonal(const Vec& entries) {
        Matrix g(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
        return SymmetricForm(std::move(g));
    }

    std::size_t dim() const { return gram_.rows(); }
    const Matrix& gram() const { return gram_; }

    Rational inner(const Vec& a, const Vec& b) const { return dot(a, gram_ * b); }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                if (i != j && !gram_(i, j).is_zero()) return false;
        return true;
    }

    friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) {
        return a.gram_ == b.gram_;
    }

private:
    Matrix gram_;
};

/// Sylvester inertia by exact symmetric congruence diagonalization.
/// A zero diagonal pivot with a nonzero off-diagonal entry in its row is
/// repaired by adding row j (and column j) to row i; that entry is only used
/// when every remaining diagonal entry is zero, so 2*a(i,j) cannot cancel.
/// Pivot choice is always the lowest available index.
inline Signature signature(const SymmetricForm& f) {
    Matrix a = f.gram();
    std::size_t d = a.rows();
    Signature sig;
    auto add_row_col = [&](std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < d; ++k) a(i, k) += a(j, k);
        for (std::size_t k = 0; k < d; ++k) a(k, i) += a(k, j);
    };
    auto swap_row_col = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        for (std::size_t k = 0; k < d; ++k) std::swap(a(k, i), a(k, j));
    };
    for (std::size_t i = 0; i < d; ++i) {
        if (a(i, i).is_zero()) {
            std::size_t j = i + 1;
            while (j < d && a(j, j).is_zero()) ++j;
            if (j < d) {
                swap_row_col(i, j);
            } else {
                j = i + 1;
                while (j < d && a(i, j).is_zero()) ++j;
                if (j == d) {
                    ++sig.zero;
                    continue;
                }
                add_row_col(i, j);
            }
        }
        const Rational p = a(i, i);
        if (p.sign() > 0)
            ++sig.pos;
        else
            ++sig.neg;
        for (std::size_t r = i + 1; r < d; ++r) {
            if (a(r, i).is_zero()) continue;
            Rational fct = a(r, i) / p;
            for (std::size_t k = 0; k < d; ++k) a(r, k) -= fct * a(i, k);
            for (std::size_t k = 0; k < d; ++k) a(k, r) -= fct * a(k, i);
        }
    }
    return sig;
}

inline bool is_nondegenerate(const SymmetricForm& f) {
    return rank(f.gram()) == f.dim();
}

/// W-perp with respect to a nondegenerate form: the kernel of basis(W) * gram.
inline Subspace perp(const SymmetricForm& f, const Subspace& w) {
    if (w.ambient() != f.dim()) throw InternalError("perp: ambient mismatch");
    if (!is_nondegenerate(f)) throw InternalError("perp: degenerate form");
    return kernel(w.basis() * f.gram());
}

/// Gram matrix of f restricted to the rows of basis.
inline SymmetricForm restrict_form(const SymmetricForm& f, const Matrix& basis) {
    return SymmetricForm(basis * f.gram() * basis.transpose());
}

} // namespace nlie
