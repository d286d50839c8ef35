#pragma once

#include <vector>

#include "nlie/derivations.hpp"
#include "nlie/rootfind.hpp"

namespace nlie {

/// Minimal polynomial of a square matrix, via the first linear dependence
/// among vectorized powers.
inline Poly minimal_polynomial(const Matrix& c) {
    const std::size_t d = c.rows();
    if (c.cols() != d) throw InternalError("minimal_polynomial: non-square matrix");
    std::vector<Vec> powers{Matrix::identity(d).vectorized()};
    Matrix power = Matrix::identity(d);
    for (std::size_t k = 1;; ++k) {
        power = power * c;
        Vec target = power.vectorized();
        Matrix cols(d * d, k);
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t i = 0; i < d * d; ++i) cols(i, j) = powers[j][i];
        if (auto x = solve(cols, target)) {
            Poly m(k + 1);
            for (std::size_t j = 0; j < k; ++j) m[j] = -(*x)[j];
            m[k] = Rational(1);
            return m;
        }
        powers.push_back(std::move(target));
    }
}

/// Basis of the commutant {E : [E, ad_T] = 0 for all T}: the module
/// endomorphisms of V under its inner derivations. Computed by shrinking
/// gl(d) one inner-derivation generator at a time.
inline std::vector<Matrix> commutant_basis(const NLieAlgebra& a) {
    const std::size_t d = a.dim();
    Subspace space = Subspace::full(d * d);
    for (const Matrix& b : inner_derivation_algebra(a).basis) {
        if (space.is_zero()) break;
        const std::size_t m = space.dim();
        Matrix cons(d * d, m);
        for (std::size_t j = 0; j < m; ++j) {
            Matrix ej = Matrix::from_vectorized(space.basis().row(j), d, d);
            Vec comm = (ej * b - b * ej).vectorized();
            for (std::size_t i = 0; i < d * d; ++i) cons(i, j) = comm[i];
        }
        Subspace coords = kernel(cons);
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < coords.dim(); ++i)
            rows.push_back(space.from_coordinates(coords.basis().row(i)));
        space = Subspace::span(d * d, rows);
    }
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < space.dim(); ++i)
        out.push_back(Matrix::from_vectorized(space.basis().row(i), d, d));
    return out;
}

/// Rescale to a primitive integer matrix (clear denominators, strip the
/// common content). Keeps eigenspaces while shrinking the arithmetic.
inline Matrix primitive_integer_scale(const Matrix& m) {
    mpz_class lcm = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m(i, j).denominator().get_mpz_t());
    mpz_class content = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpz_class num = m(i, j).numerator() * (lcm / m(i, j).denominator());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
        }
    if (content == 0) return m;
    Rational scale{mpq_class(lcm) / mpq_class(content)};
    Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = scale * m(i, j);
    return out;
}

/// Proper nonzero eigenspaces ker(c - lambda) of commutant elements, for the
/// exact rational eigenvalues lambda. Each is invariant under every inner
/// derivation, hence an ideal; on a direct sum of simple factors these
/// kernels are exactly the factor ideals. Pairwise sums of basis elements
/// are only tried when the basis elements themselves split nothing.
inline std::vector<Subspace> commutant_eigen_ideals(const NLieAlgebra& a) {
    const std::size_t d = a.dim();
    std::vector<Subspace> out;
    if (d == 0) return out;
    auto basis = commutant_basis(a);
    auto try_candidate = [&](const Matrix& raw) {
        Matrix c = primitive_integer_scale(raw);
        Poly m = minimal_polynomial(c);
        if (poly_degree(m) <= 1) return; // scalar action splits nothing
        for (const Rational& lambda : rational_roots(m)) {
            Matrix shifted = c;
            for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= lambda;
            Subspace eigen = kernel(shifted);
            if (eigen.dim() > 0 && eigen.dim() < d) {
                bool seen = false;
                for (const auto& s : out) seen = seen || s == eigen;
                if (!seen) out.push_back(std::move(eigen));
            }
        }
    };
    for (const Matrix& c : basis) try_candidate(c);
    if (out.empty() && basis.size() > 1)
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                try_candidate(basis[i] + basis[j]);
    return out;
}

} // namespace nlie
