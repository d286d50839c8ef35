#pragma once

// Shared fixtures for the test suites: small reference algebras and seeded
// corpus generators.

#include "nlie/build.hpp"
#include "nlie/prng.hpp"
#include "nlie/validation.hpp"

namespace nlie::testsupport {

inline Vec unit(std::size_t d, std::size_t i) {
    Vec v(d);
    v[i] = Rational(1);
    return v;
}

/// The dim-5 lorentzian double extension of euclidean R^3 by a line:
/// basis (u, w1, w2, w3, v), brackets [u x y] = x cross y and
/// [x y z] = -det(x|y|z) v, metric = euclidean on W plus the hyperbolic
/// pairing <u, v> = 1. Signature (4, 1, 0); v spans the centre.
inline MetricNLieAlgebra lorentzian5() {
    NLieAlgebra a(3, 5);
    a.tensor.set({0, 1, 2}, {0, 0, 0, Rational(1), 0});  // [u w1 w2] = w3
    a.tensor.set({0, 1, 3}, {0, 0, Rational(-1), 0, 0}); // [u w1 w3] = -w2
    a.tensor.set({0, 2, 3}, {0, Rational(1), 0, 0, 0});  // [u w2 w3] = w1
    a.tensor.set({1, 2, 3}, {0, 0, 0, 0, Rational(-1)}); // [w1 w2 w3] = -v
    Matrix g(5, 5);
    g(0, 4) = g(4, 0) = Rational(1);
    g(1, 1) = g(2, 2) = g(3, 3) = Rational(1);
    return validated_or_throw({std::move(a), SymmetricForm(std::move(g))},
                              "lorentzian5 fixture");
}

/// S4 with the chosen signs, n = 3.
inline MetricNLieAlgebra simple4(std::vector<int> signs = {1, 1, 1, 1}) {
    return build_simple(3, signs);
}

/// One-dimensional euclidean abelian algebra of matching arity.
inline MetricNLieAlgebra line(std::size_t n = 3, Rational norm = Rational(1)) {
    return build_abelian(1, SymmetricForm::diagonal({norm}), n);
}

/// G-skew random matrix: S*G with S skew-symmetric, entries from the rng.
inline Matrix random_skew_adjoint(SplitMix64& rng, const SymmetricForm& g) {
    const std::size_t d = g.dim();
    Matrix s(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Rational x = rng.next_rational() / Rational(4);
            s(i, j) = x;
            s(j, i) = -x;
        }
    return s * g.gram();
}

/// Rational isometry of g via the Cayley transform (I - A)^{-1}(I + A) of a
/// g-skew A; retries with fresh randomness until I - A is invertible.
inline Matrix random_isometry(SplitMix64& rng, const SymmetricForm& g) {
    const std::size_t d = g.dim();
    while (true) {
        Matrix a = random_skew_adjoint(rng, g);
        Matrix id = Matrix::identity(d);
        Matrix m = id - a;
        if (m.determinant().is_zero()) continue;
        // columns of q = (I - A)^{-1}(I + A); solve column by column
        Matrix rhs = id + a;
        Matrix q(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            auto col = solve(m, rhs.col(j));
            if (!col) throw InternalError("cayley: singular after determinant check");
            for (std::size_t i = 0; i < d; ++i) q(i, j) = (*col)[i];
        }
        return q;
    }
}

/// Conjugate a metric algebra by an isometry of its metric: new basis
/// vectors are the columns of q, so the Gram matrix is unchanged. A basis
/// change preserves both defining identities exactly, so the validated flag
/// carries over without a re-check.
inline MetricNLieAlgebra conjugate_by_isometry(const MetricNLieAlgebra& m,
                                               const Matrix& q) {
    Matrix p = q.transpose();
    NLieAlgebra moved = change_basis(m.algebra, p);
    SymmetricForm g(p * m.metric.gram() * p.transpose());
    if (!(g == m.metric)) throw InternalError("conjugate_by_isometry: metric moved");
    MetricNLieAlgebra out{std::move(moved), std::move(g)};
    out.validated = m.validated;
    return out;
}

} // namespace nlie::testsupport
