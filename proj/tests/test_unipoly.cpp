#include <stdexcept>

#include "doctest.h"
#include "ineq/unipoly.hpp"

using ineq::Rational;
using ineq::UniPoly;

TEST_CASE("normalization and degree") {
    CHECK(UniPoly({1, 2, 0}).degree() == 1);
    CHECK(UniPoly({0}).is_zero());
    CHECK(UniPoly({}).degree() == -1);
    CHECK(UniPoly({0, 0, 5}).leading() == Rational(5));
}

TEST_CASE("descending string constructor") {
    CHECK(UniPoly::from_descending_string("2,-3,0,0,3,0,-2") == UniPoly({-2, 0, 3, 0, 0, -3, 2}));
    CHECK(UniPoly::from_descending_string("1,-1/2") == UniPoly({Rational(-1, 2), Rational(1)}));
}

TEST_CASE("evaluation") {
    const UniPoly p({-2, 0, 3, 0, 0, -3, 2});  // 2x^6 - 3x^5 + 3x^2 - 2
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(p.eval(Rational(0)) == Rational(-2));
    CHECK(p.eval(Rational(1, 2)) == Rational(2, 64) - Rational(3, 32) + Rational(3, 4) - Rational(2));
    CHECK(p.eval_d(1.0) == doctest::Approx(0.0));
}

TEST_CASE("shift scale reverse agree with evaluation") {
    const UniPoly p({1, -4, 0, 2, 5});
    const Rational s(3, 7);
    for (long k = -3; k <= 3; ++k) {
        const Rational x(k, 2);
        CHECK(p.shifted(s).eval(x) == p.eval(x + s));
        CHECK(p.scaled(s).eval(x) == p.eval(s * x));
    }
    // reversed: x^deg * p(1/x)
    const Rational x(5, 3);
    CHECK(p.reversed().eval(x) == ineq::pow(x, p.degree()) * p.eval(Rational(1) / x));
}

TEST_CASE("division") {
    const UniPoly num({-1, 0, 1});  // x^2 - 1
    const UniPoly den({-1, 1});     // x - 1
    UniPoly q, r;
    UniPoly::divmod(num, den, q, r);
    CHECK(q == UniPoly({1, 1}));
    CHECK(r.is_zero());
    CHECK(UniPoly::divexact(num, den) == UniPoly({1, 1}));
    CHECK_THROWS(UniPoly::divexact(UniPoly({1, 0, 1}), den));
}

TEST_CASE("gcd and squarefree structure") {
    const UniPoly a = UniPoly({-1, 1}) * UniPoly({-1, 1}) * UniPoly({2, 1});  // (x-1)^2 (x+2)
    const UniPoly b = UniPoly({-1, 1}) * UniPoly({3, 1});                     // (x-1)(x+3)
    CHECK(UniPoly::gcd(a, b) == UniPoly({-1, 1}));

    CHECK(a.squarefree_part() == (UniPoly({-1, 1}) * UniPoly({2, 1})).monic());

    const auto decomp = a.squarefree_decomposition();
    Rational lead = a.leading();
    UniPoly rebuilt({1});
    rebuilt = rebuilt * lead;
    for (const auto& [factor, mult] : decomp) {
        for (int i = 0; i < mult; ++i) rebuilt = rebuilt * factor;
        CHECK(factor.leading() == Rational(1));
    }
    CHECK(rebuilt == a);
}

TEST_CASE("derivative and zero-root stripping") {
    CHECK(UniPoly({5, 0, 3, 2}).derivative() == UniPoly({0, 6, 6}));
    CHECK(UniPoly({0, 0, 1, 1}).strip_zero_roots() == UniPoly({1, 1}));
    CHECK(UniPoly({0, 4}).strip_zero_roots() == UniPoly({4}));
}

TEST_CASE("inverted_cleared rewrites 1/x substitution") {
    // p(x) = x^2 - x + 1; x^2 p(1/x) = 1 - x + x^2, same coefficients reversed
    CHECK(UniPoly({1, -1, 1}).inverted_cleared() == UniPoly({1, -1, 1}));
    // p(x) = x - 1; x p(1/x) = 1 - x
    CHECK(UniPoly({-1, 1}).inverted_cleared() == UniPoly({1, -1}));
}
