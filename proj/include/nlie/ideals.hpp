#pragma once

#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/form.hpp"

namespace nlie {

/// [w, e_{t1}, ..., e_{t(n-1)}] for a general vector w, expanded over basis
/// lookups in the first slot.
inline Vec bracket_with_tuple(const NLieAlgebra& a, const Vec& w, const IndexTuple& rest) {
    const std::size_t d = a.dim();
    Vec out(d);
    IndexTuple scratch(rest.size() + 1);
    std::copy(rest.begin(), rest.end(), scratch.begin() + 1);
    for (std::size_t l = 0; l < d; ++l) {
        if (w[l].is_zero()) continue;
        scratch[0] = static_cast<int>(l);
        axpy(out, w[l], a.tensor.eval_basis(scratch));
    }
    return out;
}

/// Span of all basis brackets [V ... V].
inline Subspace derived_ideal(const NLieAlgebra& a) {
    std::vector<Vec> values;
    for (const auto& [tuple, value] : a.tensor.entries()) values.push_back(value);
    return Subspace::span(a.dim(), values);
}

/// Span of the brackets with all slots in s: [s ... s].
inline Subspace derived_subspace(const NLieAlgebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) throw InternalError("derived_subspace: ambient mismatch");
    std::vector<Vec> values;
    if (s.dim() >= a.n()) {
        std::vector<Vec> rows(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) rows[i] = s.basis().row(i);
        for (const auto& combo : increasing_tuples(s.dim(), a.n())) {
            std::vector<Vec> args;
            args.reserve(a.n());
            for (int idx : combo) args.push_back(rows[static_cast<std::size_t>(idx)]);
            values.push_back(a.bracket(args));
        }
    }
    return Subspace::span(a.dim(), values);
}

inline bool is_ideal(const NLieAlgebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) throw InternalError("is_ideal: ambient mismatch");
    const auto rest_tuples = increasing_tuples(a.dim(), a.n() - 1);
    for (std::size_t i = 0; i < s.dim(); ++i) {
        Vec w = s.basis().row(i);
        for (const auto& rest : rest_tuples)
            if (!s.contains(bracket_with_tuple(a, w, rest))) return false;
    }
    return true;
}

inline bool is_subalgebra(const NLieAlgebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) throw InternalError("is_subalgebra: ambient mismatch");
    if (s.dim() < a.n()) return true; // brackets of dependent slots vanish
    std::vector<Vec> rows(s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i) rows[i] = s.basis().row(i);
    for (const auto& combo : increasing_tuples(s.dim(), a.n())) {
        std::vector<Vec> args;
        args.reserve(a.n());
        for (int idx : combo) args.push_back(rows[static_cast<std::size_t>(idx)]);
        if (!s.contains(a.bracket(args))) return false;
    }
    return true;
}

/// Smallest ideal containing s: iterate W <- W + [W V ... V] to a fixed point.
inline Subspace ideal_closure(const NLieAlgebra& a, const Subspace& s) {
    if (s.ambient() != a.dim()) throw InternalError("ideal_closure: ambient mismatch");
    const auto rest_tuples = increasing_tuples(a.dim(), a.n() - 1);
    Subspace w = s;
    while (true) {
        std::vector<Vec> grown;
        for (std::size_t i = 0; i < w.dim(); ++i) {
            Vec row = w.basis().row(i);
            grown.push_back(row);
            for (const auto& rest : rest_tuples)
                grown.push_back(bracket_with_tuple(a, row, rest));
        }
        Subspace next = Subspace::span(a.dim(), grown);
        if (next == w) return w;
        w = std::move(next);
    }
}

/// Centre: kernel of x -> [x, e_{i2}, ..., e_{in}] stacked over all
/// increasing (n-1)-tuples.
inline Subspace center(const NLieAlgebra& a) {
    const std::size_t d = a.dim();
    const auto rest_tuples = increasing_tuples(d, a.n() - 1);
    Matrix constraints(rest_tuples.size() * d, d);
    std::size_t r = 0;
    IndexTuple scratch(a.n());
    for (const auto& rest : rest_tuples) {
        std::copy(rest.begin(), rest.end(), scratch.begin() + 1);
        for (std::size_t j = 0; j < d; ++j) {
            scratch[0] = static_cast<int>(j);
            Vec v = a.tensor.eval_basis(scratch);
            for (std::size_t k = 0; k < d; ++k) constraints(r + k, j) = v[k];
        }
        r += d;
    }
    return kernel(constraints);
}

/// Centraliser of an ideal: kernel of x -> [x, w, e_{i3}, ..., e_{in}]
/// over a basis w of the ideal and all increasing (n-2)-tuples.
inline Subspace centralizer(const NLieAlgebra& a, const Subspace& ideal) {
    if (!is_ideal(a, ideal)) throw DomainError("centralizer: input is not an ideal");
    const std::size_t d = a.dim();
    const auto rest_tuples = increasing_tuples(d, a.n() - 2);
    Matrix constraints(ideal.dim() * rest_tuples.size() * d, d);
    std::size_t r = 0;
    IndexTuple scratch(a.n());
    for (std::size_t wi = 0; wi < ideal.dim(); ++wi) {
        Vec w = ideal.basis().row(wi);
        for (const auto& rest : rest_tuples) {
            std::copy(rest.begin(), rest.end(), scratch.begin() + 2);
            for (std::size_t j = 0; j < d; ++j) {
                scratch[0] = static_cast<int>(j);
                Vec acc(d);
                for (std::size_t l = 0; l < d; ++l) {
                    if (w[l].is_zero()) continue;
                    scratch[1] = static_cast<int>(l);
                    axpy(acc, w[l], a.tensor.eval_basis(scratch));
                }
                for (std::size_t k = 0; k < d; ++k) constraints(r + k, j) = acc[k];
            }
            r += d;
        }
    }
    return kernel(constraints);
}

/// Derived series I = I0 >= I1 >= ... down to stabilization; the last entry
/// repeats nothing (a constant series is returned as the single term I).
/// Every term is checked to still be an ideal.
inline std::vector<Subspace> derived_series(const NLieAlgebra& a, const Subspace& ideal) {
    if (!is_ideal(a, ideal)) throw DomainError("derived_series: input is not an ideal");
    std::vector<Subspace> series{ideal};
    while (true) {
        Subspace next = derived_subspace(a, series.back());
        if (next == series.back()) break;
        if (!series.back().contains(next))
            throw InternalError("derived_series: series is not descending");
        if (!is_ideal(a, next))
            throw InternalError("derived_series: derived term is not an ideal");
        series.push_back(std::move(next));
        if (series.back().is_zero()) break;
    }
    return series;
}

inline bool is_solvable(const NLieAlgebra& a, const Subspace& ideal) {
    return derived_series(a, ideal).back().is_zero();
}

} // namespace nlie
