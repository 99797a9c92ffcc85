#include <array>
#include <stdexcept>

#include "doctest.h"
#include "ineq/reduction.hpp"

using ineq::MemberId;
using ineq::MultiPoly;
using ineq::Rational;
using ineq::Relation;
using ineq::SymPoly;

namespace {

// The kernel sum cleared over three variables, written out longhand from
// elementary symmetric functions; independent of the pipeline under test.
MultiPoly expected_deficit() {
    const MultiPoly e1 = ineq::elementary_symmetric(3, 1);
    const MultiPoly e2 = ineq::elementary_symmetric(3, 2);
    const MultiPoly e3 = ineq::elementary_symmetric(3, 3);
    const MultiPoly c3 = MultiPoly::constant(3, Rational(3));
    return c3 - e2 + e3 * Rational(3) - e1 * Rational(3) + e1 * e1 * Rational(2) - e3 * e2 -
           e1 * e2 * Rational(2) + e2 * e2;
}

}  // namespace

TEST_CASE("clearing the kernel denominators") {
    const auto cleared = ineq::clear_denominators(ineq::member(MemberId::D1), 3);
    CHECK(cleared.relation == Relation::LE);
    CHECK(cleared.orientation_valid);
    CHECK(cleared.poly == -expected_deficit());
    CHECK(cleared.poly.coeff({0, 0, 0}) == Rational(-3));
    CHECK(cleared.poly.coeff({1, 2, 2}) == Rational(1));
    const std::array<Rational, 3> ones{Rational(1), Rational(1), Rational(1)};
    CHECK(cleared.poly.eval(ones).is_zero());
    CHECK_THROWS_AS(ineq::clear_denominators(ineq::member(MemberId::D1), 4), std::invalid_argument);
}

TEST_CASE("full reduction of the kernel member") {
    const auto trace = ineq::reduce_member(MemberId::D1);
    CHECK(trace.deficit == expected_deficit());
    CHECK(trace.symmetric.expand() == trace.deficit);
    CHECK(trace.k_form == ineq::k1_polynomial());

    // frozen value: at (2, 2, 1/4) the deficit equals 15/8, i.e. K1(17/4, 5)
    const std::array<Rational, 3> pt{Rational(2), Rational(2), Rational(1, 4)};
    CHECK(trace.deficit.eval(pt) == Rational(15, 8));
    CHECK(trace.k_form.eval(Rational(17, 4), Rational(5), Rational(1)) == Rational(15, 8));
    CHECK(ineq::k1_polynomial().eval(Rational(3), Rational(3), Rational(1)).is_zero());
}

TEST_CASE("quadratic decomposition certificate") {
    const auto k2 = ineq::k1_decompose();  // throws if the identity fails
    CHECK(k2.square_part.to_string() == "1*S1^2 + -2*S1*S2 + 1*S2^2");
    CHECK(k2.remainder.to_string() == "1*S1^2 + -3*S1 + -2*S2 + 6");
    CHECK(k2.remainder_expanded ==
          MultiPoly::parse("1*x^2 + 1*y^2 + 1*z^2 + -3*x + -3*y + -3*z + 6", 3));
    SymPoly sum;
    sum.rep = k2.square_part.rep + k2.remainder.rep;
    CHECK(sum == ineq::k1_polynomial());
}

TEST_CASE("reciprocal-sum identities hold for every bound") {
    for (const auto& k : {Rational(0), Rational(1), Rational(3), Rational(-2), Rational(7, 3)}) {
        CHECK(ineq::proposition_identity(k, ineq::PropositionVariant::P1).is_zero());
        CHECK(ineq::proposition_identity(k, ineq::PropositionVariant::P2).is_zero());
    }
}

TEST_CASE("pairwise-product and square transforms are certified") {
    const auto swap = ineq::lemma3_transform(ineq::TransformVariant::SWAP);
    CHECK(swap.certified);
    CHECK(swap.p_residual.is_zero());
    CHECK(swap.q_residual.is_zero());

    const auto square = ineq::lemma3_transform(ineq::TransformVariant::SQUARE);
    CHECK(square.certified);
    CHECK(square.p_residual.is_zero());
    CHECK(square.q_residual.is_zero());
}

TEST_CASE("equivalences across the family") {
    const auto m2 = ineq::equivalence_check(MemberId::D1, MemberId::M2);
    CHECK(m2.equivalent);
    CHECK(m2.route == "direct");
    REQUIRE(m2.scale.has_value());
    CHECK(*m2.scale == Rational(1));

    const auto d2 = ineq::equivalence_check(MemberId::D1, MemberId::D2);
    CHECK(d2.equivalent);
    CHECK(d2.route == "inverted");

    const auto m3 = ineq::equivalence_check(MemberId::D1, MemberId::M3);
    CHECK(m3.equivalent);

    const auto m4 = ineq::equivalence_check(MemberId::D1, MemberId::M4);
    CHECK(m4.equivalent);
    CHECK(m4.route == "inverted");

    const auto m5 = ineq::equivalence_check(MemberId::D1, MemberId::M5);
    CHECK(m5.equivalent);
    CHECK(m5.route == "direct");

    const auto fixed = ineq::equivalence_check(MemberId::D1, MemberId::M1_FIXED);
    CHECK(fixed.equivalent);
    CHECK(fixed.route == "direct");
    CHECK(*fixed.scale == Rational(1));
}

TEST_CASE("the printed modification is separated by a witness") {
    const auto res = ineq::equivalence_check(MemberId::D1, MemberId::M1_PRINTED);
    CHECK_FALSE(res.equivalent);
    CHECK(res.route == "witness");
    REQUIRE(res.witness.has_value());
    const auto& w = *res.witness;
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Rational(2));
    CHECK(w[1] == Rational(2));
    CHECK(w[2] == Rational(1, 4));
    // product-one point: D1 satisfied, printed form violated
    CHECK(ineq::eval_sum(ineq::member(MemberId::D1), w) <= Rational(0));
    CHECK(ineq::eval_sum(ineq::member(MemberId::M1_PRINTED), w) == Rational(38, 21));
}

TEST_CASE("non-kernel members reduce consistently") {
    const auto trace = ineq::reduce_member(MemberId::D4);
    CHECK(trace.symmetric.expand() == trace.deficit);
    CHECK(trace.k_form.eval(Rational(3), Rational(3), Rational(1)).is_zero());
    const std::array<Rational, 3> ones{Rational(1), Rational(1), Rational(1)};
    CHECK(trace.deficit.eval(ones).is_zero());
}

TEST_CASE("sibling bounds cannot be separated or scaled into each other") {
    CHECK_THROWS_AS(ineq::equivalence_check(MemberId::D2, MemberId::D3), std::logic_error);
}
