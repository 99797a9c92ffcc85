#include <array>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "ineq/optimizer.hpp"

using ineq::ConstraintSpec;
using ineq::MemberId;
using ineq::Mode;
using ineq::Rational;

namespace {

double product_of(const std::vector<double>& x) {
    double p = 1.0;
    for (double v : x) p *= v;
    return p;
}

double sum_of(const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

double pair_sum_of(const std::vector<double>& x) {
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) s += x[i] * x[j];
    return s;
}

}  // namespace

TEST_CASE("feasible witnesses satisfy their constraints") {
    ConstraintSpec prod;
    CHECK(ineq::feasible_witness(prod) == std::vector<double>{1.0, 1.0, 1.0});

    ConstraintSpec s1;
    s1.product_one = false;
    s1.s1_target = 1.0;
    const auto w1 = ineq::feasible_witness(s1);
    CHECK(sum_of(w1) == doctest::Approx(1.0).epsilon(1e-12));

    ConstraintSpec s2;
    s2.product_one = false;
    s2.s2_target = 3.0;
    const auto w2 = ineq::feasible_witness(s2);
    CHECK(pair_sum_of(w2) == doctest::Approx(3.0).epsilon(1e-12));

    ConstraintSpec both;
    both.product_one = false;
    both.s1_target = 17.0 / 4.0;
    both.s2_target = 5.0;
    const auto wb = ineq::feasible_witness(both);
    CHECK(sum_of(wb) == doctest::Approx(17.0 / 4.0).epsilon(1e-12));
    CHECK(pair_sum_of(wb) == doctest::Approx(5.0).epsilon(1e-12));
    for (double v : wb) CHECK(v > 0.0);
}

TEST_CASE("infeasible and unsupported constraint sets") {
    ConstraintSpec bad;
    bad.product_one = false;
    bad.s1_target = 1.0;
    bad.s2_target = 10.0;  // needs S1^2 >= 3 S2
    CHECK_THROWS_AS(ineq::feasible_witness(bad), ineq::InfeasibleError);

    ConstraintSpec negative;
    negative.product_one = false;
    negative.s1_target = -1.0;
    CHECK_THROWS_AS(ineq::feasible_witness(negative), ineq::InfeasibleError);

    ConstraintSpec mixed;
    mixed.product_one = true;
    mixed.s1_target = 3.0;
    CHECK_THROWS_AS(ineq::feasible_witness(mixed), std::invalid_argument);

    ConstraintSpec tiny;
    tiny.n = 1;
    CHECK_THROWS_AS(ineq::feasible_witness(tiny), std::invalid_argument);
}

TEST_CASE("pair case peaks at the equality point") {
    ConstraintSpec spec;
    spec.n = 2;
    const auto rep = ineq::extremize(MemberId::D1, spec, Mode::SUP, 40, 7, 1e-10);
    CHECK(std::abs(rep.extremum) <= 1e-8);
    REQUIRE(rep.argpoint.size() == 2);
    CHECK(rep.argpoint[0] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(rep.argpoint[1] == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(product_of(rep.argpoint) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(rep.converged_starts > 0);
}

TEST_CASE("reciprocal member infimum is 1") {
    ConstraintSpec spec;
    const auto rep = ineq::extremize(MemberId::D5, spec, Mode::INF, 60, 42, 1e-10);
    CHECK(rep.extremum == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(rep.argpoint[0] == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("extremize is deterministic for a fixed seed") {
    ConstraintSpec spec;
    const auto a = ineq::extremize(MemberId::D1, spec, Mode::SUP, 24, 99, 1e-9);
    const auto b = ineq::extremize(MemberId::D1, spec, Mode::SUP, 24, 99, 1e-9);
    CHECK(a.extremum == b.extremum);
    CHECK(a.argpoint == b.argpoint);
    CHECK(a.converged_starts == b.converged_starts);
}

TEST_CASE("sampling respects the bound for n=3 and breaks it for n=4") {
    const auto ok = ineq::sample_search(MemberId::D1, 3, 20000, 42);
    CHECK(ok.samples == 20000);
    CHECK(ok.violations == 0);
    CHECK(ok.worst_value <= 1e-12);

    const auto broken = ineq::sample_search(MemberId::D1, 4, 50000, 42);
    CHECK(broken.violations > 0);
    REQUIRE(broken.witness.has_value());
    CHECK(broken.worst_value > 0.0);
    CHECK(product_of(broken.worst_point) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("sampling is deterministic") {
    const auto a = ineq::sample_search(MemberId::D1, 4, 30000, 7);
    const auto b = ineq::sample_search(MemberId::D1, 4, 30000, 7);
    CHECK(a.worst_value == b.worst_value);
    CHECK(a.worst_point == b.worst_point);
    CHECK(a.violations == b.violations);
}

TEST_CASE("projected gradient vanishes at the equality point") {
    ConstraintSpec spec;
    const std::array<double, 3> ones{1.0, 1.0, 1.0};
    const auto g = ineq::gradient(MemberId::D1, spec, ones);
    for (double v : g) CHECK(std::abs(v) <= 1e-12);

    const std::array<double, 3> off{2.0, 2.0, 0.25};
    const auto g2 = ineq::gradient(MemberId::D1, spec, off);
    double norm = 0.0;
    for (double v : g2) norm += v * v;
    CHECK(norm > 1e-6);
}

TEST_CASE("quadratic symmetric-function values are exact") {
    CHECK(ineq::lemma1_value(Rational(2), Rational(3), Rational(1, 6)) == Rational(127, 36));
    CHECK(ineq::lemma1_value(Rational(2), Rational(2), Rational(1, 4)) == Rational(21, 16));
    CHECK(ineq::lemma1_value(Rational(1), Rational(1), Rational(1)) == Rational(0));
    CHECK(ineq::lemma1_value(2.0, 3.0, 1.0 / 6.0) ==
          doctest::Approx(127.0 / 36.0).epsilon(1e-13));
}

TEST_CASE("quadratic minimization lands on all-ones") {
    const auto rep = ineq::lemma1_minimize(80, 42, 1e-10);
    CHECK(std::abs(rep.extremum) <= 1e-8);
    for (double v : rep.argpoint) CHECK(v == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("sharp constants for the three textbook cases") {
    ConstraintSpec prod;
    const auto c1 = ineq::best_constant(prod, 80, 42, 1e-10);
    CHECK(c1.constant == doctest::Approx(1.0).epsilon(1e-6));

    ConstraintSpec none;
    none.product_one = false;
    const auto c0 = ineq::best_constant(none, 80, 42, 1e-10);
    CHECK(c0.constant == doctest::Approx(0.0).epsilon(1e-6));

    ConstraintSpec s1;
    s1.product_one = false;
    s1.s1_target = 1.0;
    const auto c3 = ineq::best_constant(s1, 80, 42, 1e-10);
    REQUIRE(c3.sup_closed.has_value());
    CHECK(*c3.sup_closed == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(c3.constant == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("stationarity certificate for the constrained quadratic") {
    const auto cert = ineq::lagrange_stationarity_check();
    CHECK(cert.identity_ok);
    CHECK(cert.positive_root_count == 1);
    REQUIRE(cert.root.has_value());
    CHECK(*cert.root == Rational(1));
    CHECK(cert.quartic_critical == Rational(15, 16));
    CHECK(cert.quartic_min_value == Rational(15893, 16384));
    CHECK(cert.quartic_positive);
}

TEST_CASE("sphere section: tangency at 1, one claim refuted honestly") {
    const auto cert = ineq::sphere_section_check(2000);
    CHECK(cert.min_gap >= -1e-12);
    CHECK(cert.min_within_step_of_one);
    CHECK(cert.g_at_one == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(cert.h_at_one == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(cert.h_endpoints_zero);
    CHECK(cert.g_increasing_after_one);
    // h is a downward parabola peaking at 3/2, so "decreasing for k > 1" fails
    CHECK_FALSE(cert.h_decreasing_after_one);
    REQUIRE(cert.h_claim_counterexample.has_value());
    const auto& [k1, k2] = *cert.h_claim_counterexample;
    CHECK(k1 > 1.0);
    CHECK(k2 > k1);
    CHECK(-k2 * k2 + 3 * k2 - 1.5 > -k1 * k1 + 3 * k1 - 1.5);
}
