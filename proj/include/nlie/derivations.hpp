#pragma once

#include <vector>

#include "nlie/ideals.hpp"

namespace nlie {

/// D is a derivation iff D[t] = sum_i [t1, ..., D ti, ..., tn] on every
/// increasing basis tuple.
inline bool is_derivation(const NLieAlgebra& a, const Endomorphism& dmat) {
    const std::size_t d = a.dim(), n = a.n();
    if (dmat.rows() != d || dmat.cols() != d)
        throw InternalError("is_derivation: shape mismatch");
    for (const auto& tuple : increasing_tuples(d, n)) {
        Vec lhs = dmat * a.tensor.eval_basis(tuple);
        Vec rhs(d);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < d; ++l) {
                const Rational& c = dmat(l, static_cast<std::size_t>(tuple[i]));
                if (c.is_zero()) continue;
                IndexTuple moved = tuple;
                moved[i] = static_cast<int>(l);
                axpy(rhs, c, a.tensor.eval_basis(moved));
            }
        }
        for (std::size_t k = 0; k < d; ++k) lhs[k] -= rhs[k];
        if (!is_zero(lhs)) return false;
    }
    return true;
}

/// Matrix of y -> [x1, ..., x_{n-1}, y].
inline Endomorphism inner_derivation(const NLieAlgebra& a, const std::vector<Vec>& xs) {
    const std::size_t d = a.dim(), n = a.n();
    if (xs.size() != n - 1) throw InternalError("inner_derivation: wrong slot count");
    Endomorphism m(d, d);
    std::vector<Vec> args = xs;
    args.emplace_back(d);
    for (std::size_t j = 0; j < d; ++j) {
        args.back().assign(d, Rational(0));
        args.back()[j] = Rational(1);
        Vec col = a.bracket(args);
        for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
    }
    return m;
}

inline Endomorphism inner_derivation_basis(const NLieAlgebra& a, const IndexTuple& xs) {
    const std::size_t d = a.dim();
    Endomorphism m(d, d);
    IndexTuple scratch = xs;
    scratch.push_back(0);
    for (std::size_t j = 0; j < d; ++j) {
        scratch.back() = static_cast<int>(j);
        Vec col = a.tensor.eval_basis(scratch);
        for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
    }
    return m;
}

/// The Lie algebra ad V of inner derivations: a canonical basis of
/// span{ad_T}, its abstract structure constants, and the coordinates of
/// every commutator in that basis (the entries of `lie.tensor`).
struct InnerDerivationAlgebra {
    std::vector<Endomorphism> basis;
    LieAlgebraPresentation lie; // arity 2, dim = basis.size()
    Subspace span;              // vectorized, ambient dim^2
};

inline InnerDerivationAlgebra inner_derivation_algebra(const NLieAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<Vec> vecs;
    for (const auto& tuple : increasing_tuples(d, a.n() - 1))
        vecs.push_back(inner_derivation_basis(a, tuple).vectorized());
    Subspace span = Subspace::span(d * d, vecs);

    InnerDerivationAlgebra out;
    out.span = span;
    const std::size_t m = span.dim();
    for (std::size_t i = 0; i < m; ++i)
        out.basis.push_back(Matrix::from_vectorized(span.basis().row(i), d, d));

    out.lie = LieAlgebraPresentation(2, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            Matrix comm = out.basis[i] * out.basis[j] - out.basis[j] * out.basis[i];
            auto coords = span.coordinates(comm.vectorized());
            if (!coords)
                throw InternalError("inner derivations do not close under commutator");
            out.lie.tensor.set({static_cast<int>(i), static_cast<int>(j)},
                               std::move(*coords));
        }
    return out;
}

/// Solution space of the derivation constraints inside gl(d), as a subspace
/// of row-major vectorized matrices.
inline Subspace derivation_space(const NLieAlgebra& a) {
    const std::size_t d = a.dim(), n = a.n();
    const auto tuples = increasing_tuples(d, n);
    Matrix constraints(tuples.size() * d, d * d);
    std::size_t row = 0;
    for (const auto& tuple : tuples) {
        const Vec value = a.tensor.eval_basis(tuple);
        // (D value)_k  -  sum_i sum_l D(l, t_i) [.. e_l ..]_k  =  0
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t mcol = 0; mcol < d; ++mcol)
                constraints(row + k, k * d + mcol) += value[mcol];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < d; ++l) {
                IndexTuple moved = tuple;
                moved[i] = static_cast<int>(l);
                Vec term = a.tensor.eval_basis(moved);
                const std::size_t dcol =
                    l * d + static_cast<std::size_t>(tuple[i]);
                for (std::size_t k = 0; k < d; ++k)
                    constraints(row + k, dcol) -= term[k];
            }
        }
        row += d;
    }
    return kernel(constraints);
}

/// Cartan criterion on a Lie algebra presentation: the Killing form
/// K(x, y) = tr(ad_x ad_y) is nondegenerate iff the algebra is semisimple.
inline bool killing_nondegenerate(const LieAlgebraPresentation& g) {
    if (g.n() != 2) throw InternalError("killing form needs an arity-2 presentation");
    const std::size_t m = g.dim();
    std::vector<Matrix> ads;
    ads.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        ads.push_back(inner_derivation_basis(g, {static_cast<int>(i)}));
    Matrix killing(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
            killing(i, j) = killing(j, i) = (ads[i] * ads[j]).trace();
    return rank(killing) == m;
}

/// Semisimplicity via the reductivity criterion: trivial centre together
/// with a semisimple algebra of inner derivations.
inline bool is_semisimple(const NLieAlgebra& a) {
    if (!center(a).is_zero()) return false;
    return killing_nondegenerate(inner_derivation_algebra(a).lie);
}

} // namespace nlie
