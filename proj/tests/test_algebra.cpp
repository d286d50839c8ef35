#include <catch2/catch_amalgamated.hpp>

#include "nlie/build.hpp"
#include "nlie/derivations.hpp"
#include "nlie/validation.hpp"

using namespace nlie;

namespace {

Vec unit(std::size_t d, std::size_t i) {
    Vec v(d);
    v[i] = Rational(1);
    return v;
}

NLieAlgebra simple3_all_plus() { return build_simple(3, {1, 1, 1, 1}).algebra; }

NLieAlgebra two_dim_solvable() {
    // [e1, e2] = e2
    NLieAlgebra a(2, 2);
    a.tensor.set({0, 1}, {Rational(0), Rational(1)});
    return a;
}

} // namespace

TEST_CASE("simple n=3 brackets match the sign rule") {
    NLieAlgebra a = simple3_all_plus();
    CHECK(a.bracket_basis({1, 2, 3}) == Vec{-1, 0, 0, 0});
    CHECK(a.bracket_basis({0, 2, 3}) == Vec{0, 1, 0, 0});
    CHECK(a.bracket_basis({0, 1, 3}) == Vec{0, 0, -1, 0});
    CHECK(a.bracket_basis({0, 1, 2}) == Vec{0, 0, 0, 1});
}

TEST_CASE("bracket evaluation is alternating and multilinear") {
    NLieAlgebra a = simple3_all_plus();
    // repeated argument
    CHECK(is_zero(a.bracket({unit(4, 0), unit(4, 0), unit(4, 1)})));
    CHECK(is_zero(a.bracket_basis({0, 0, 1})));
    // scaling one slot
    Vec e2x2 = unit(4, 1);
    for (auto& c : e2x2) c *= Rational(2);
    CHECK(a.bracket({e2x2, unit(4, 2), unit(4, 3)}) == Vec{-2, 0, 0, 0});
    // odd permutation flips the sign
    CHECK(a.bracket_basis({2, 1, 3}) == Vec{1, 0, 0, 0});
    // mixed argument: linearity in each slot
    Vec mix(4);
    mix[1] = Rational(1, 2);
    mix[2] = Rational(-3);
    Vec got = a.bracket({mix, unit(4, 2), unit(4, 3)});
    CHECK(got == Vec{Rational(-1, 2), 0, 0, 0});
}

TEST_CASE("n-jacobi passes on simple algebras and the abelian algebra") {
    for (std::size_t n : {3u, 4u, 5u}) {
        std::vector<int> signs(n + 1, 1);
        CHECK(check_n_jacobi(build_simple(n, signs).algebra).pass());
    }
    CHECK(check_n_jacobi(NLieAlgebra(3, 4)).pass());
}

TEST_CASE("rescaling one structure constant of the simple algebra stays Lie") {
    // The whole diagonal family [e1..^ei..e_{n+1}] = c_i e_i satisfies the
    // n-Jacobi identity for arbitrary c_i: in every instance both sides
    // reduce to the same product c_i c_j or vanish on a repeated index.
    NLieAlgebra a = simple3_all_plus();
    a.tensor.set({1, 2, 3}, {Rational(-2), 0, 0, 0});
    CHECK(check_n_jacobi(a).pass());
    // It does break invariance of the unscaled diagonal metric.
    CHECK_FALSE(check_invariance(a.tensor, SymmetricForm::diagonal({1, 1, 1, 1})).pass());
}

TEST_CASE("a genuine n-jacobi violation is reported with its tuples") {
    // Adding an e1-component to [e1 e2 e3] breaks the identity; by hand,
    // x = (e2, e4), y = (e1, e2, e3) leaves residual -e3.
    NLieAlgebra a = simple3_all_plus();
    a.tensor.set({0, 1, 2}, {Rational(1), 0, 0, Rational(1)});
    auto report = check_n_jacobi(a);
    REQUIRE_FALSE(report.pass());
    bool found = false;
    for (const auto& v : report.violations) {
        CHECK_FALSE(is_zero(v.residual));
        if (v.outer == IndexTuple{1, 3} && v.inner == IndexTuple{0, 1, 2}) {
            found = true;
            CHECK(v.residual == Vec{0, 0, -1, 0});
        }
    }
    CHECK(found);

    // n = 2 is admitted: [e1 e2] = e3, [e3 e4] = e4 fails classical Jacobi.
    NLieAlgebra g(2, 4);
    g.tensor.set({0, 1}, {0, 0, Rational(1), 0});
    g.tensor.set({2, 3}, {0, 0, 0, Rational(1)});
    CHECK_FALSE(check_n_jacobi(g).pass());
}

TEST_CASE("invariance holds for the diagonal sign metric and fails otherwise") {
    MetricNLieAlgebra simple = build_simple(3, {1, 1, 1, -1});
    CHECK(check_invariance(simple).pass());

    MetricNLieAlgebra abelian = build_abelian(3, SymmetricForm(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -1}}), 3);
    CHECK(check_invariance(abelian).pass());

    MetricNLieAlgebra skewed{simple3_all_plus(),
                             SymmetricForm::diagonal({1, 1, 1, Rational(2)})};
    auto report = check_invariance(skewed);
    CHECK_FALSE(report.pass());
}

TEST_CASE("validate marks the algebra only when both identities hold") {
    MetricNLieAlgebra good = build_simple(4, {1, 1, 1, 1, -1});
    CHECK(good.validated); // builder validates
    MetricNLieAlgebra bad{simple3_all_plus(), SymmetricForm::diagonal({1, 1, 1, Rational(2)})};
    validate(bad);
    CHECK_FALSE(bad.validated);
}

TEST_CASE("derivation checks") {
    NLieAlgebra simple = simple3_all_plus();
    CHECK_FALSE(is_derivation(simple, Matrix::identity(4)));
    NLieAlgebra abelian(3, 4);
    CHECK(is_derivation(abelian, Matrix::identity(4)));

    Matrix ad12 = inner_derivation(simple, {unit(4, 0), unit(4, 1)});
    CHECK(is_derivation(simple, ad12));
    // ad_{e1,e2}: e3 -> e4, e4 -> -e3, e1, e2 -> 0
    CHECK(ad12.col(0) == Vec(4));
    CHECK(ad12.col(1) == Vec(4));
    CHECK(ad12.col(2) == Vec{0, 0, 0, 1});
    CHECK(ad12.col(3) == Vec{0, 0, -1, 0});

    // repeated slot vector gives the zero derivation
    CHECK(inner_derivation(simple, {unit(4, 2), unit(4, 2)}).is_zero());
}

TEST_CASE("inner derivation algebra dimensions") {
    NLieAlgebra simple = simple3_all_plus();
    auto inner = inner_derivation_algebra(simple);
    CHECK(inner.basis.size() == 6);
    CHECK(inner.lie.dim() == 6);
    CHECK(check_n_jacobi(inner.lie).pass());

    CHECK(inner_derivation_algebra(NLieAlgebra(3, 4)).basis.empty());

    MetricNLieAlgebra s = build_simple(3, {1, 1, 1, 1});
    MetricNLieAlgebra ss = direct_sum(s, s);
    CHECK(inner_derivation_algebra(ss.algebra).basis.size() == 12);
}

TEST_CASE("derivation space") {
    NLieAlgebra abelian(3, 3);
    CHECK(derivation_space(abelian).dim() == 9);

    NLieAlgebra one(2, 1);
    CHECK(derivation_space(one).dim() == 1);

    NLieAlgebra simple = simple3_all_plus();
    Subspace der = derivation_space(simple);
    CHECK(der.dim() == 6);
    CHECK(der == inner_derivation_algebra(simple).span);
}

TEST_CASE("killing form criterion") {
    // abelian Lie algebra: identically zero Killing form
    CHECK_FALSE(killing_nondegenerate(NLieAlgebra(2, 3)));

    NLieAlgebra adv = inner_derivation_algebra(simple3_all_plus()).lie;
    CHECK(killing_nondegenerate(adv));

    CHECK_FALSE(killing_nondegenerate(two_dim_solvable()));
}

TEST_CASE("semisimplicity") {
    for (std::size_t n : {3u, 4u, 5u}) {
        std::vector<int> signs(n + 1, 1);
        CHECK(is_semisimple(build_simple(n, signs).algebra));
    }
    CHECK_FALSE(is_semisimple(NLieAlgebra(3, 2)));
    MetricNLieAlgebra s = build_simple(3, {1, 1, 1, 1});
    CHECK(is_semisimple(direct_sum(s, s).algebra));
    CHECK_FALSE(is_semisimple(direct_sum(s, build_abelian(1, SymmetricForm::diagonal({Rational(1)}), 3)).algebra));
}

TEST_CASE("every inner derivation is metric-skew on a validated algebra") {
    MetricNLieAlgebra m = build_simple(3, {1, 1, -1, 1});
    const Matrix& g = m.metric.gram();
    for (const auto& tuple : increasing_tuples(m.dim(), m.n() - 1)) {
        Matrix ad = inner_derivation_basis(m.algebra, tuple);
        CHECK((ad.transpose() * g + g * ad).is_zero());
    }
}
