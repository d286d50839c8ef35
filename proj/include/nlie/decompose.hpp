#pragma once

#include <optional>
#include <vector>

#include "nlie/commutant.hpp"
#include "nlie/ideals.hpp"
#include "nlie/prng.hpp"
#include "nlie/validation.hpp"

namespace nlie {

/// A subspace of a metric algebra with its structural flags computed once at
/// construction; the flags always agree with recomputation.
struct IdealHandle {
    Subspace space;
    bool ideal = false;
    bool subalgebra = false;
    bool isotropic = false;
    bool nondegenerate = false;
    bool coisotropic = false;
};

inline IdealHandle make_ideal_handle(const MetricNLieAlgebra& m, Subspace s) {
    IdealHandle h;
    h.ideal = is_ideal(m.algebra, s);
    h.subalgebra = h.ideal || is_subalgebra(m.algebra, s);
    Subspace p = perp(m.metric, s);
    Subspace radical = span_intersect(s, p);
    h.isotropic = radical == s;
    h.nondegenerate = radical.is_zero();
    h.coisotropic = s.contains(p);
    h.space = std::move(s);
    return h;
}

/// Deterministic tiered enumeration of proper nonzero ideals. The visitor
/// receives each new candidate in a fixed order and returns true to stop.
/// Tiers: basis-vector closures; centre / derived ideal / their
/// intersection; pair-sum lines (abelian tensors only, where a nondegenerate
/// form always has a non-null vector among e_i, e_i +- e_j); perps of
/// everything found; pairwise intersections; commutant eigenspace kernels
/// with their perps; finally 64 seeded random probe closures. Later tiers
/// are increasingly expensive and only run while the visitor keeps asking.
template <class Visitor>
inline void enumerate_ideal_candidates(const MetricNLieAlgebra& m,
                                       std::uint64_t seed, Visitor&& visit) {
    const std::size_t d = m.dim();
    const NLieAlgebra& a = m.algebra;
    std::vector<Subspace> found;
    bool stop = false;
    auto push = [&](Subspace s) {
        if (stop || s.dim() == 0 || s.dim() >= d) return;
        for (const auto& existing : found)
            if (existing == s) return;
        found.push_back(std::move(s));
        stop = visit(static_cast<const Subspace&>(found.back()));
    };
    auto push_closure = [&](const Vec& v) {
        if (stop || nlie::is_zero(v)) return;
        push(ideal_closure(a, Subspace::span(d, {v})));
    };

    for (std::size_t i = 0; i < d && !stop; ++i) {
        Vec e(d);
        e[i] = Rational(1);
        push_closure(e);
    }
    if (stop) return;

    push(center(a));
    push(derived_ideal(a));
    if (found.size() >= 2) push(span_intersect(center(a), derived_ideal(a)));
    if (stop) return;

    if (a.tensor.is_zero_map()) {
        for (std::size_t i = 0; i < d && !stop; ++i)
            for (std::size_t j = i + 1; j < d && !stop; ++j) {
                Vec e(d);
                e[i] = Rational(1);
                e[j] = Rational(1);
                push_closure(e);
                e[j] = Rational(-1);
                push_closure(e);
            }
        if (stop) return;
    }

    for (std::size_t i = 0, n0 = found.size(); i < n0 && !stop; ++i)
        push(perp(m.metric, found[i]));
    if (stop) return;

    for (std::size_t i = 0, n0 = found.size(); i < n0 && !stop; ++i)
        for (std::size_t j = i + 1; j < n0 && !stop; ++j)
            push(span_intersect(found[i], found[j]));
    if (stop) return;

    for (Subspace& s : commutant_eigen_ideals(a)) {
        if (stop) break;
        Subspace sp = perp(m.metric, s);
        push(std::move(s));
        push(std::move(sp));
    }
    if (stop) return;

    SplitMix64 rng(seed);
    for (int probe = 0; probe < 64 && !stop; ++probe)
        push_closure(rng.next_vector(d));
}

/// The full candidate pool as a list (enumeration run to exhaustion).
inline std::vector<Subspace> ideal_candidates(const MetricNLieAlgebra& m,
                                              std::uint64_t seed) {
    std::vector<Subspace> pool;
    enumerate_ideal_candidates(m, seed, [&](const Subspace& s) {
        pool.push_back(s);
        return false;
    });
    return pool;
}

/// A proper nonzero ideal that the probe set cannot shrink: the closure of
/// every probe vector inside it regenerates it. Absent when the candidate
/// tiers find no proper nonzero ideal at all.
inline std::optional<IdealHandle> minimal_ideal_search(const MetricNLieAlgebra& m,
                                                       std::uint64_t seed) {
    std::optional<Subspace> start;
    enumerate_ideal_candidates(m, seed, [&](const Subspace& s) {
        if (!start || s < *start) start = s;
        return start->dim() == 1; // nothing beats a line
    });
    if (!start) return std::nullopt;
    Subspace best = std::move(*start);

    const NLieAlgebra& a = m.algebra;
    SplitMix64 rng(seed ^ 0x6d696e696d616cULL);
    bool shrank = true;
    while (shrank) {
        shrank = false;
        std::vector<Vec> probes;
        for (std::size_t i = 0; i < best.dim(); ++i)
            probes.push_back(best.basis().row(i));
        for (std::size_t i = 0; i < best.dim(); ++i)
            for (std::size_t j = i + 1; j < best.dim(); ++j) {
                Vec v = best.basis().row(i);
                axpy(v, Rational(1), best.basis().row(j));
                probes.push_back(std::move(v));
            }
        for (int extra = 0; extra < 64; ++extra)
            probes.push_back(best.from_coordinates(rng.next_vector(best.dim())));
        for (const Vec& v : probes) {
            if (nlie::is_zero(v)) continue;
            Subspace c = ideal_closure(a, Subspace::span(m.dim(), {v}));
            if (!best.contains(c))
                throw InternalError("closure escaped the ambient ideal");
            if (c.dim() > 0 && !(c == best)) {
                best = std::move(c);
                shrank = true;
                break;
            }
        }
    }
    return make_ideal_handle(m, best);
}

enum class MinimalKind { Nondegenerate, Isotropic };

/// The minimal-ideal dichotomy: I intersect I-perp is an ideal inside I,
/// so minimality forces it to be 0 or I. Anything else means the input was
/// not minimal.
inline MinimalKind classify_minimal(const MetricNLieAlgebra& m, const IdealHandle& i) {
    if (!i.ideal) throw DomainError("classify_minimal: not an ideal");
    if (i.nondegenerate) return MinimalKind::Nondegenerate;
    if (i.isotropic) return MinimalKind::Isotropic;
    throw InternalError("classify_minimal: ideal is neither nondegenerate nor "
                        "isotropic, so it was not minimal");
}

/// A factor of an orthogonal decomposition in its induced basis, plus the
/// rows embedding that basis back into the original space.
struct EmbeddedFactor {
    MetricNLieAlgebra algebra;
    Matrix embedding; // dim(factor) x dim(original)
};

inline EmbeddedFactor restrict_metric(const MetricNLieAlgebra& m, const Subspace& s) {
    EmbeddedFactor f;
    f.algebra = validated_or_throw(
        {restrict_algebra(m.algebra, s), restrict_form(m.metric, s.basis())},
        "restriction to a nondegenerate ideal");
    f.embedding = s.basis();
    return f;
}

struct DecompositionResult {
    std::vector<MetricNLieAlgebra> factors;
    std::vector<Matrix> embeddings;    // factor bases in original coordinates
    std::vector<Subspace> certificates; // the nondegenerate ideal of each split
};

namespace detail {

inline void decompose_rec(const MetricNLieAlgebra& m, const Matrix& embedding,
                          std::uint64_t seed, DecompositionResult& out) {
    std::optional<Subspace> split;
    enumerate_ideal_candidates(m, seed, [&](const Subspace& s) {
        if (rank(restrict_form(m.metric, s.basis()).gram()) != s.dim())
            return false; // degenerate; keep looking
        split = s;
        return true;
    });
    if (split) {
        Subspace p = perp(m.metric, *split);
        out.certificates.push_back(
            Subspace::from_matrix_rows(split->basis() * embedding));
        EmbeddedFactor left = restrict_metric(m, *split);
        EmbeddedFactor right = restrict_metric(m, p);
        decompose_rec(left.algebra, left.embedding * embedding, seed, out);
        decompose_rec(right.algebra, right.embedding * embedding, seed, out);
        return;
    }
    MetricNLieAlgebra factor = m;
    if (!factor.validated) validate(factor);
    out.factors.push_back(std::move(factor));
    out.embeddings.push_back(embedding);
}

} // namespace detail

/// Recursive orthogonal splitting along nondegenerate proper ideals. Factors
/// for which the candidate pool finds no such ideal are reported
/// indecomposable (complete on the constructions this library builds; a
/// certified decision procedure for adversarial inputs is not claimed).
inline DecompositionResult decompose(const MetricNLieAlgebra& m, std::uint64_t seed) {
    DecompositionResult out;
    detail::decompose_rec(m, Matrix::identity(m.dim()), seed, out);
    return out;
}

/// dim = n+1, perfect, centreless, ad V of dimension C(n+1, 2) with
/// nondegenerate Killing form: separates the simple algebra from everything
/// else of its dimension without an isomorphism search.
inline bool simple_fingerprint(const NLieAlgebra& a) {
    const std::size_t n = a.n(), d = a.dim();
    if (d != n + 1) return false;
    if (!derived_ideal(a).is_full()) return false;
    if (!center(a).is_zero()) return false;
    auto inner = inner_derivation_algebra(a);
    if (inner.basis.size() != n * (n + 1) / 2) return false;
    return killing_nondegenerate(inner.lie);
}

enum class IndecomposableTag { OneDimensional, Simple, DoubleExtension };

struct IndecomposableKind {
    IndecomposableTag tag;
    std::optional<IdealHandle> isotropic_minimal; // double extensions only
    std::optional<Subspace> minimal_perp;
    std::size_t extension_dim = 0; // dim I, 1 or n+1
};

/// The structure dichotomy for an indecomposable metric algebra: it is a
/// line, simple, or a double extension along an isotropic minimal ideal of
/// dimension 1 or n+1.
inline IndecomposableKind classify_indecomposable(const MetricNLieAlgebra& m,
                                                  std::uint64_t seed) {
    if (m.dim() == 1) return {IndecomposableTag::OneDimensional, {}, {}, 0};
    auto minimal = minimal_ideal_search(m, seed);
    if (!minimal) {
        if (simple_fingerprint(m.algebra))
            return {IndecomposableTag::Simple, {}, {}, 0};
        throw InternalError(
            "no proper ideal found but the simplicity fingerprint fails; "
            "either the input was invalid or the probe set is incomplete");
    }
    if (classify_minimal(m, *minimal) == MinimalKind::Nondegenerate)
        throw InternalError("nondegenerate minimal ideal in an algebra "
                            "declared indecomposable");
    Subspace p = perp(m.metric, minimal->space);
    const std::size_t idim = minimal->space.dim();
    if (idim != 1 && idim != m.n() + 1)
        throw InternalError("isotropic minimal ideal of impossible dimension " +
                            std::to_string(idim));
    return {IndecomposableTag::DoubleExtension, std::move(minimal), std::move(p), idim};
}

/// Metric algebra induced on J/J-perp for a coisotropic ideal J, taking as
/// coset representatives the basis rows of J whose pivots are not pivots
/// of J-perp (lowest indices first).
struct Subquotient {
    MetricNLieAlgebra algebra;
    Matrix representatives; // rows in original coordinates
};

inline Subquotient subquotient_metric(const MetricNLieAlgebra& m, const IdealHandle& j) {
    if (!j.ideal) throw DomainError("subquotient_metric: not an ideal");
    if (!j.coisotropic) throw DomainError("subquotient_metric: not coisotropic");
    const std::size_t d = m.dim();
    Subspace jp = perp(m.metric, j.space);

    std::vector<bool> jp_pivot(d, false);
    for (std::size_t p : jp.pivots()) jp_pivot[p] = true;
    std::vector<Vec> rep_rows;
    for (std::size_t i = 0; i < j.space.dim(); ++i)
        if (!jp_pivot[j.space.pivots()[i]]) rep_rows.push_back(j.space.basis().row(i));
    const std::size_t r = rep_rows.size();
    if (r != j.space.dim() - jp.dim())
        throw InternalError("subquotient_metric: representative count mismatch");
    Matrix reps = Matrix::from_rows(rep_rows, d);

    // coordinates in the basis (J-perp basis, reps) of J
    Matrix basis_cols(d, jp.dim() + r);
    for (std::size_t i = 0; i < jp.dim(); ++i)
        for (std::size_t k = 0; k < d; ++k) basis_cols(k, i) = jp.basis()(i, k);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < d; ++k) basis_cols(k, jp.dim() + i) = reps(i, k);

    NLieAlgebra quotient(m.n(), r);
    if (r >= m.n()) {
        for (const auto& tuple : increasing_tuples(r, m.n())) {
            std::vector<Vec> args;
            for (int idx : tuple) args.push_back(rep_rows[static_cast<std::size_t>(idx)]);
            Vec v = m.algebra.bracket(args);
            auto coords = solve(basis_cols, v);
            if (!coords)
                throw InternalError("subquotient bracket escaped the ideal");
            Vec quot(r);
            for (std::size_t i = 0; i < r; ++i) quot[i] = (*coords)[jp.dim() + i];
            quotient.tensor.set(tuple, std::move(quot));
        }
    }
    SymmetricForm induced = restrict_form(m.metric, reps);
    return {validated_or_throw({std::move(quotient), std::move(induced)},
                               "coisotropic subquotient"),
            std::move(reps)};
}

} // namespace nlie
