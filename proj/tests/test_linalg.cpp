#include <catch2/catch_amalgamated.hpp>

#include "nlie/form.hpp"
#include "nlie/linalg.hpp"
#include "nlie/prng.hpp"

using namespace nlie;

namespace {

Matrix random_matrix(SplitMix64& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.next_rational();
    return m;
}

Matrix random_invertible(SplitMix64& rng, std::size_t d) {
    while (true) {
        Matrix m = random_matrix(rng, d, d);
        if (!m.determinant().is_zero()) return m;
    }
}

} // namespace

TEST_CASE("rref on the spec examples") {
    Matrix id = Matrix::identity(2);
    auto r1 = rref(id);
    CHECK(r1.reduced == id);
    CHECK(r1.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r1.rank == 2);

    auto r2 = rref(Matrix{{1, 2}, {2, 4}});
    CHECK(r2.rank == 1);
    CHECK(r2.reduced == Matrix{{1, 2}, {0, 0}});

    auto r3 = rref(Matrix{{0, 1}, {1, 0}});
    CHECK(r3.rank == 2);
    CHECK(r3.reduced == Matrix::identity(2));
}

TEST_CASE("rref is a fixed point and rank ignores row order") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng.next_below(5), c = 1 + rng.next_below(5);
        Matrix m = random_matrix(rng, r, c);
        auto first = rref(m);
        auto second = rref(first.reduced);
        CHECK(second.reduced == first.reduced);
        CHECK(second.pivots == first.pivots);

        Matrix shuffled = m;
        for (std::size_t i = r; i-- > 1;)
            shuffled.swap_rows(i, rng.next_below(i + 1));
        CHECK(rref(shuffled).rank == first.rank);
    }
}

TEST_CASE("kernel examples") {
    Subspace k1 = kernel(Matrix{{1, 2}});
    REQUIRE(k1.dim() == 1);
    CHECK(k1.basis() == Matrix{{1, Rational(-1, 2)}});

    CHECK(kernel(Matrix::identity(3)).is_zero());
    CHECK(kernel(Matrix(3, 3)) == Subspace::full(3));
}

TEST_CASE("solve zeroes free variables and reports inconsistency as absent") {
    auto x = solve(Matrix::identity(2), {Rational(3), Rational(4)});
    REQUIRE(x);
    CHECK(*x == Vec{Rational(3), Rational(4)});

    auto y = solve(Matrix{{1, 1}}, {Rational(2)});
    REQUIRE(y);
    CHECK(*y == Vec{Rational(2), Rational(0)});

    CHECK_FALSE(solve(Matrix{{1}, {1}}, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("subspace sum and intersection examples") {
    Subspace e1 = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)}});
    Subspace e2 = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)}});
    Subspace e12 = Subspace::span(3, {{Rational(1), Rational(0), Rational(0)},
                                      {Rational(0), Rational(1), Rational(0)}});
    Subspace e23 = Subspace::span(3, {{Rational(0), Rational(1), Rational(0)},
                                      {Rational(0), Rational(0), Rational(1)}});
    CHECK(span_sum(e1, e2) == e12);
    CHECK(span_intersect(e12, e23) == e2);
    CHECK(span_intersect(e12, e12) == e12);
    CHECK_THROWS(span_sum(e1, Subspace::full(2)));
}

TEST_CASE("dimension formula for sums and intersections") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t d = 2 + rng.next_below(5);
        Subspace a = Subspace::from_matrix_rows(random_matrix(rng, 1 + rng.next_below(d), d));
        Subspace b = Subspace::from_matrix_rows(random_matrix(rng, 1 + rng.next_below(d), d));
        CHECK(span_sum(a, b).dim() + span_intersect(a, b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("signature on the spec examples") {
    Vec diag{Rational(1), Rational(1), Rational(1), Rational(-1)};
    CHECK(signature(SymmetricForm::diagonal(diag)) == Signature{3, 1, 0});

    SymmetricForm hyper(Matrix{{0, 1}, {1, 0}});
    CHECK(signature(hyper) == Signature{1, 1, 0});

    CHECK(signature(SymmetricForm(Matrix(2, 2))) == Signature{0, 0, 2});
}

TEST_CASE("signature is a congruence invariant") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t d = 1 + rng.next_below(5);
        Matrix s = random_matrix(rng, d, d);
        SymmetricForm g(s + s.transpose());
        Matrix p = random_invertible(rng, d);
        SymmetricForm conj(p.transpose() * g.gram() * p);
        CHECK(signature(conj) == signature(g));
        CHECK(signature(g).pos + signature(g).neg + signature(g).zero == d);
    }
}

TEST_CASE("perp examples and the double-perp identity") {
    SymmetricForm euclid2 = SymmetricForm::diagonal({Rational(1), Rational(1)});
    Subspace e1 = Subspace::span(2, {{Rational(1), Rational(0)}});
    Subspace e2 = Subspace::span(2, {{Rational(0), Rational(1)}});
    CHECK(perp(euclid2, e1) == e2);

    SymmetricForm hyper(Matrix{{0, 1}, {1, 0}});
    CHECK(perp(hyper, e1) == e1); // isotropic line

    CHECK(perp(euclid2, Subspace::full(2)).is_zero());
    CHECK_THROWS_AS(perp(SymmetricForm(Matrix(2, 2)), e1), InternalError);

    SplitMix64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t d = 1 + rng.next_below(5);
        Matrix s = random_matrix(rng, d, d);
        SymmetricForm g(s + s.transpose());
        if (!is_nondegenerate(g)) continue;
        Subspace w = Subspace::from_matrix_rows(random_matrix(rng, 1 + rng.next_below(d), d));
        Subspace wp = perp(g, w);
        CHECK(w.dim() + wp.dim() == d);
        CHECK(perp(g, wp) == w);
    }
}
