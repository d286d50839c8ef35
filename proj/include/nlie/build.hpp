#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nlie/derivations.hpp"
#include "nlie/validation.hpp"

namespace nlie {

/// Result of a construction whose input data is only accepted once the
/// assembled algebra passes exhaustive validation. On failure, `failures`
/// holds the named checks that rejected it.
template <class T>
struct Checked {
    std::optional<T> value;
    std::vector<ValidationReport> failures;
    std::string error;

    bool ok() const { return value.has_value(); }

    static Checked success(T v) { return {std::move(v), {}, {}}; }
    static Checked fail(std::vector<ValidationReport> reports, std::string note = {}) {
        return {std::nullopt, std::move(reports), std::move(note)};
    }
};

/// The (n+1)-dimensional simple algebra with one sign per basis vector:
/// dropping e_i from the full wedge gives (-1)^i eps_i e_i (1-based i),
/// with the invariant diagonal inner product diag(eps).
inline MetricNLieAlgebra build_simple(std::size_t n, const std::vector<int>& signs) {
    if (n < 2) throw DomainError("build_simple: n must be >= 2");
    if (signs.size() != n + 1)
        throw DomainError("build_simple: need exactly n+1 signs");
    for (int s : signs)
        if (s != 1 && s != -1) throw DomainError("build_simple: signs must be +-1");

    const std::size_t d = n + 1;
    NLieAlgebra a(n, d);
    for (std::size_t omit = 0; omit < d; ++omit) {
        IndexTuple tuple;
        for (std::size_t i = 0; i < d; ++i)
            if (i != omit) tuple.push_back(static_cast<int>(i));
        Vec value(d);
        // 1-based omitted index is omit+1
        value[omit] = Rational(((omit + 1) % 2 == 0 ? 1 : -1) * signs[omit]);
        a.tensor.set(tuple, std::move(value));
    }
    Vec diag(d);
    for (std::size_t i = 0; i < d; ++i) diag[i] = Rational(signs[i]);
    return validated_or_throw({std::move(a), SymmetricForm::diagonal(diag)},
                              "build_simple");
}

/// Abelian algebra: zero tensor, any nondegenerate metric. The carried
/// arity only matters for forming direct sums with non-abelian factors.
inline MetricNLieAlgebra build_abelian(std::size_t dim, SymmetricForm gram,
                                       std::size_t arity = 2) {
    if (gram.dim() != dim) throw DomainError("build_abelian: gram dimension mismatch");
    if (!is_nondegenerate(gram)) throw DomainError("build_abelian: degenerate gram");
    return validated_or_throw({NLieAlgebra(arity, dim), std::move(gram)}, "build_abelian");
}

inline Vec embed(const Vec& v, std::size_t offset, std::size_t total) {
    Vec out(total);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

/// Orthogonal direct sum: block tensor, block metric, all mixed brackets
/// and inner products zero.
inline MetricNLieAlgebra direct_sum(const MetricNLieAlgebra& a, const MetricNLieAlgebra& b) {
    if (a.n() != b.n()) throw DomainError("direct_sum: arity mismatch");
    const std::size_t da = a.dim(), db = b.dim(), d = da + db;
    NLieAlgebra sum(a.n(), d);
    for (const auto& [tuple, value] : a.algebra.tensor.entries())
        sum.tensor.set(tuple, embed(value, 0, d));
    for (const auto& [tuple, value] : b.algebra.tensor.entries()) {
        IndexTuple shifted = tuple;
        for (int& i : shifted) i += static_cast<int>(da);
        sum.tensor.set(shifted, embed(value, da, d));
    }
    Matrix gram(d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) gram(i, j) = a.metric.gram()(i, j);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) gram(da + i, da + j) = b.metric.gram()(i, j);
    return validated_or_throw({std::move(sum), SymmetricForm(std::move(gram))},
                              "direct_sum");
}

/// A candidate action of the inner derivations of `base` on a module:
/// one module_dim x module_dim matrix per increasing (n-1)-tuple.
struct RepresentationData {
    NLieAlgebra base;
    std::size_t module_dim = 0;
    std::map<IndexTuple, Matrix> action;

    const Matrix* action_on(const IndexTuple& tuple) const {
        auto it = action.find(tuple);
        return it == action.end() ? nullptr : &it->second;
    }
};

/// Extend base by the module: [V...V] stays, [V...V w] acts through the
/// action matrices, [V...V w w] = 0. The n-Jacobi check on the result is
/// the acceptance test; it fails exactly when the action is not a Lie
/// algebra representation of ad V.
inline Checked<NLieAlgebra> build_representation_extension(const RepresentationData& r) {
    const std::size_t n = r.base.n(), dv = r.base.dim(), d = dv + r.module_dim;
    NLieAlgebra ext(n, d);
    for (const auto& [tuple, value] : r.base.tensor.entries())
        ext.tensor.set(tuple, embed(value, 0, d));
    for (const auto& [tuple, mat] : r.action) {
        if (mat.rows() != r.module_dim || mat.cols() != r.module_dim)
            throw DomainError("representation action: matrix shape mismatch");
        for (std::size_t j = 0; j < r.module_dim; ++j) {
            Vec col = mat.col(j);
            if (nlie::is_zero(col)) continue;
            IndexTuple full = tuple;
            full.push_back(static_cast<int>(dv + j));
            ext.tensor.set(full, embed(col, dv, d));
        }
    }
    auto jacobi = check_n_jacobi(ext);
    if (!jacobi.pass()) {
        jacobi.check = "representation extension n-jacobi";
        return Checked<NLieAlgebra>::fail({std::move(jacobi)},
                                          "action is not a representation of ad V");
    }
    return Checked<NLieAlgebra>::success(std::move(ext));
}

/// Coadjoint extension on V + V*: the action matrices are the negative
/// transposes of the inner derivations.
inline NLieAlgebra build_coadjoint(const NLieAlgebra& a) {
    RepresentationData data;
    data.base = a;
    data.module_dim = a.dim();
    for (const auto& tuple : increasing_tuples(a.dim(), a.n() - 1)) {
        Matrix ad = inner_derivation_basis(a, tuple);
        if (ad.is_zero()) continue;
        data.action.emplace(tuple, Rational(-1) * ad.transpose());
    }
    auto ext = build_representation_extension(data);
    if (!ext.ok())
        throw DomainError("build_coadjoint: base algebra fails the n-Jacobi identity");
    return std::move(*ext.value);
}

} // namespace nlie
