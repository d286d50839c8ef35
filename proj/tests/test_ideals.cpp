#include <catch2/catch_amalgamated.hpp>

#include "nlie/build.hpp"
#include "nlie/ideals.hpp"
#include "support.hpp"

using namespace nlie;
using nlie::testsupport::line;
using nlie::testsupport::lorentzian5;
using nlie::testsupport::simple4;
using nlie::testsupport::unit;

namespace {

Subspace embedded_block(std::size_t total, std::size_t offset, std::size_t dim) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < dim; ++i) rows.push_back(unit(total, offset + i));
    return Subspace::span(total, rows);
}

} // namespace

TEST_CASE("ideal closures") {
    NLieAlgebra simple = simple4().algebra;
    Subspace e1 = Subspace::span(4, {unit(4, 0)});
    CHECK(ideal_closure(simple, e1) == Subspace::full(4));

    MetricNLieAlgebra sum = direct_sum(simple4(), line());
    Subspace central = embedded_block(5, 4, 1);
    CHECK(ideal_closure(sum.algebra, central) == central);

    CHECK(ideal_closure(simple, Subspace::zero(4)).is_zero());
}

TEST_CASE("ideal and subalgebra membership") {
    MetricNLieAlgebra sum = direct_sum(simple4(), line());
    Subspace central = embedded_block(5, 4, 1);
    CHECK(is_ideal(sum.algebra, central));
    CHECK(is_subalgebra(sum.algebra, central));

    NLieAlgebra simple = simple4().algebra;
    Subspace plane = Subspace::span(4, {unit(4, 0), unit(4, 1)});
    CHECK(is_subalgebra(simple, plane)); // too few independent slots to leave it
    CHECK_FALSE(is_ideal(simple, plane)); // [e1 e2 e3] = e4 escapes

    CHECK(is_ideal(simple, Subspace::full(4)));
    CHECK(is_subalgebra(simple, Subspace::full(4)));
}

TEST_CASE("centre") {
    CHECK(center(NLieAlgebra(3, 4)) == Subspace::full(4));
    CHECK(center(simple4().algebra).is_zero());

    // the double extension has centre exactly the line through v
    MetricNLieAlgebra v5 = lorentzian5();
    CHECK(center(v5.algebra) == Subspace::span(5, {unit(5, 4)}));
}

TEST_CASE("centraliser") {
    NLieAlgebra simple = simple4().algebra;
    CHECK(centralizer(simple, Subspace::full(4)).is_zero());
    CHECK(centralizer(simple, Subspace::zero(4)) == Subspace::full(4));

    MetricNLieAlgebra ss = direct_sum(simple4(), simple4());
    Subspace first = embedded_block(8, 0, 4);
    Subspace second = embedded_block(8, 4, 4);
    CHECK(centralizer(ss.algebra, first) == second);

    Subspace plane = Subspace::span(4, {unit(4, 0), unit(4, 1)});
    CHECK_THROWS_AS(centralizer(simple, plane), DomainError);
}

TEST_CASE("derived series") {
    NLieAlgebra abelian(3, 3);
    auto series = derived_series(abelian, Subspace::full(3));
    REQUIRE(series.size() == 2);
    CHECK(series[0] == Subspace::full(3));
    CHECK(series[1].is_zero());

    NLieAlgebra simple = simple4().algebra;
    auto constant = derived_series(simple, Subspace::full(4));
    REQUIRE(constant.size() == 1);
    CHECK(constant[0] == Subspace::full(4));

    // lorentzian dim-5 example: V >= W + <v> >= <v> >= 0
    MetricNLieAlgebra v5 = lorentzian5();
    auto ds = derived_series(v5.algebra, Subspace::full(5));
    REQUIRE(ds.size() == 4);
    CHECK(ds[1] == Subspace::span(5, {unit(5, 1), unit(5, 2), unit(5, 3), unit(5, 4)}));
    CHECK(ds[2] == Subspace::span(5, {unit(5, 4)}));
    CHECK(ds[3].is_zero());

    CHECK_THROWS_AS(derived_series(simple, Subspace::span(4, {unit(4, 0)})), DomainError);
}

TEST_CASE("solvability") {
    CHECK(is_solvable(NLieAlgebra(3, 3), Subspace::full(3)));
    CHECK_FALSE(is_solvable(simple4().algebra, Subspace::full(4)));
    CHECK(is_solvable(lorentzian5().algebra, Subspace::full(5)));

    MetricNLieAlgebra mixed = direct_sum(simple4(), line());
    CHECK_FALSE(is_solvable(mixed.algebra, Subspace::full(5)));
    CHECK(is_solvable(mixed.algebra, embedded_block(5, 4, 1)));
}

TEST_CASE("derived ideal and the centre-perp identity") {
    CHECK(derived_ideal(NLieAlgebra(3, 3)).is_zero());
    CHECK(derived_ideal(simple4().algebra) == Subspace::full(4));

    MetricNLieAlgebra v5 = lorentzian5();
    Subspace derived = derived_ideal(v5.algebra);
    CHECK(derived == Subspace::span(5, {unit(5, 1), unit(5, 2), unit(5, 3), unit(5, 4)}));
    CHECK(derived == perp(v5.metric, center(v5.algebra)));
}
