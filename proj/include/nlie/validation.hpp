#pragma once

#include <string>
#include <utility>

#include "nlie/algebra.hpp"
#include "nlie/form.hpp"

namespace nlie {

/// One failing basis instance of a checked identity. For the Jacobi check,
/// outer is the (n-1)-tuple of x's and inner the n-tuple of y's with the
/// full residual vector; for the invariance check, inner is the pair
/// (y1, y2) and the residual has a single entry.
struct Violation {
    IndexTuple outer;
    IndexTuple inner;
    Vec residual;
};

struct ValidationReport {
    std::string check;
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
};

/// Exhaustive n-Jacobi check over basis tuples; sound and complete by
/// multilinearity. Lists every violating tuple pair, not just the first.
/// Arity-1 tensors have no Jacobi constraint and pass vacuously.
inline ValidationReport check_n_jacobi(const BracketTensor& t) {
    ValidationReport report{"n-jacobi", {}};
    const std::size_t n = t.arity(), d = t.dim();
    if (n < 2) return report;
    const auto outer_tuples = increasing_tuples(d, n - 1);
    const auto inner_tuples = increasing_tuples(d, n);
    IndexTuple scratch;
    for (const auto& xs : outer_tuples) {
        for (const auto& ys : inner_tuples) {
            Vec lhs(d);
            const Vec* cy = t.coeff(ys);
            if (cy) {
                for (std::size_t k = 0; k < d; ++k) {
                    if ((*cy)[k].is_zero()) continue;
                    scratch = xs;
                    scratch.push_back(static_cast<int>(k));
                    axpy(lhs, (*cy)[k], t.eval_basis(scratch));
                }
            }
            Vec rhs(d);
            for (std::size_t i = 0; i < n; ++i) {
                scratch = xs;
                scratch.push_back(ys[i]);
                Vec moved = t.eval_basis(scratch);
                for (std::size_t k = 0; k < d; ++k) {
                    if (moved[k].is_zero()) continue;
                    IndexTuple yk = ys;
                    yk[i] = static_cast<int>(k);
                    axpy(rhs, moved[k], t.eval_basis(yk));
                }
            }
            for (std::size_t k = 0; k < d; ++k) lhs[k] -= rhs[k];
            if (!is_zero(lhs)) report.violations.push_back({xs, ys, std::move(lhs)});
        }
    }
    return report;
}

inline ValidationReport check_n_jacobi(const NLieAlgebra& a) {
    return check_n_jacobi(a.tensor);
}

/// Invariance of the inner product under inner derivations:
/// <[x... y1], y2> + <[x... y2], y1> = 0 over basis tuples, y1 <= y2.
inline ValidationReport check_invariance(const BracketTensor& t,
                                         const SymmetricForm& form) {
    ValidationReport report{"invariance", {}};
    const std::size_t n = t.arity(), d = t.dim();
    if (form.dim() != d) throw InternalError("check_invariance: dimension mismatch");
    const auto outer_tuples = increasing_tuples(d, n - 1);
    IndexTuple scratch;
    for (const auto& xs : outer_tuples) {
        // paired[y] = G * [xs, e_y]
        std::vector<Vec> paired(d);
        for (std::size_t y = 0; y < d; ++y) {
            scratch = xs;
            scratch.push_back(static_cast<int>(y));
            paired[y] = form.gram() * t.eval_basis(scratch);
        }
        for (std::size_t y1 = 0; y1 < d; ++y1)
            for (std::size_t y2 = y1; y2 < d; ++y2) {
                Rational r = paired[y1][y2] + paired[y2][y1];
                if (!r.is_zero())
                    report.violations.push_back(
                        {xs, {static_cast<int>(y1), static_cast<int>(y2)}, Vec{r}});
            }
    }
    return report;
}

/// A Lie n-algebra with a nondegenerate invariant inner product. The
/// validated flag is only set by validate() after both identities check out.
struct MetricNLieAlgebra {
    NLieAlgebra algebra;
    SymmetricForm metric;
    bool validated = false;

    MetricNLieAlgebra() = default;
    MetricNLieAlgebra(NLieAlgebra a, SymmetricForm f)
        : algebra(std::move(a)), metric(std::move(f)) {
        if (metric.dim() != algebra.dim())
            throw InternalError("metric dimension does not match algebra dimension");
        if (!is_nondegenerate(metric))
            throw InternalError("metric algebra requires a nondegenerate form");
    }

    std::size_t n() const { return algebra.n(); }
    std::size_t dim() const { return algebra.dim(); }

    friend bool operator==(const MetricNLieAlgebra& a, const MetricNLieAlgebra& b) {
        return a.algebra == b.algebra && a.metric == b.metric;
    }
};

inline ValidationReport check_invariance(const MetricNLieAlgebra& m) {
    return check_invariance(m.algebra.tensor, m.metric);
}

/// Runs both validators; marks the value validated iff both pass.
inline std::pair<ValidationReport, ValidationReport> validate(MetricNLieAlgebra& m) {
    auto jacobi = check_n_jacobi(m.algebra);
    auto invariance = check_invariance(m);
    m.validated = jacobi.pass() && invariance.pass();
    return {std::move(jacobi), std::move(invariance)};
}

/// Validate-and-throw helper for constructions whose output is guaranteed
/// by theory; a failure here is a library bug, not bad input.
inline MetricNLieAlgebra validated_or_throw(MetricNLieAlgebra m, const char* what) {
    auto [jacobi, invariance] = validate(m);
    if (!m.validated)
        throw InternalError(std::string(what) + ": construction failed validation (" +
                            std::to_string(jacobi.violations.size()) + " jacobi, " +
                            std::to_string(invariance.violations.size()) +
                            " invariance violations)");
    return m;
}

} // namespace nlie
