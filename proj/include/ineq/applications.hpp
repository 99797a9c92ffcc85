// Downstream instantiations of the family: triangle-geometry triples with
// product 1, cyclic forms under x=a/b, y=b/c, z=c/a, cubics whose positive
// roots multiply to 1, and the Bernoulli power variants.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ineq/family.hpp"
#include "ineq/rational.hpp"

namespace ineq {

struct TriangleData {
    double a = 0, b = 0, c = 0;
    double p = 0, area = 0, r = 0, R = 0;
    double h_a = 0, h_b = 0, h_c = 0;
    double alpha = 0, beta = 0, gamma = 0;  // radians, opposite a, b, c

    // Everything from the sides: stable Heron area, r = area/p,
    // R = abc/(4 area), h_a = 2 area / a, angles by the law of cosines.
    // Throws std::domain_error unless the strict triangle inequality holds.
    static TriangleData from_sides(double a, double b, double c);
};

// Seeded rejection sampling: sides uniform in (0.1, 10) until a strict
// triangle appears. Deterministic per seed.
TriangleData random_triangle(std::uint64_t seed);

struct TriangleTriple {
    int index = 0;  // 1-based position in the published list of ten
    std::string label;
    std::array<double, 3> xyz{};
    double product = 0.0;
    bool accepted = false;  // finite, positive, product within 1e-10 of 1
    std::string note;       // reason when not accepted
};

std::vector<TriangleTriple> triangle_triples(const TriangleData& t);

struct TripleVerdict {
    int index = 0;
    double value = 0.0;
    bool satisfied = false;
};

// Evaluates the member sum on every accepted triple; the slack absorbs the
// triples' floating product residual (the bound is exact only at product 1).
std::vector<TripleVerdict> run_family_on_triples(const TriangleData& t, MemberId id,
                                                 double slack = 1e-8);

struct CyclicValue {
    double lhs = 0.0;
    bool satisfied = false;
};

// Direct homogenized evaluation of a cyclic member at (a, b, c),
// cross-checked against the base member sum at (a/b, b/c, c/a).
CyclicValue cyclic_eval(double a, double b, double c, MemberId id);

struct CubicSpec {
    Rational a, b;  // t^3 + a t^2 + b t - 1
};

struct VietaResult {
    bool accepted = false;
    int real_roots = 0;      // with multiplicity
    int positive_roots = 0;  // with multiplicity
    std::vector<double> roots;  // ascending, multiplicity expanded
    double product_residual = 0.0;
    std::vector<std::pair<MemberId, bool>> member_verdicts;  // D1..D7 on acceptance
};

// Isolates the real roots exactly; accepts iff three positive roots counted
// with multiplicity, then polishes, checks the product against tol, and
// runs every D member on the root triple.
VietaResult vieta_roots(const CubicSpec& spec, double tol);

// Bound carried by the power variant of the member at exponent alpha.
// D2: <= 3; D6: <= 3-2a; D7: <= 3-a (all for 0 < a < 1); D5: >= 3-2a for
// a > 1 or a < 0. Throws std::invalid_argument outside the regime.
std::pair<double, Relation> power_bound(MemberId id, double alpha);

// Sum of term(x_k)^alpha over the point; same regime validation.
double power_sum(const FamilyMember& m, double alpha, std::span<const double> point);

// u^alpha - alpha*u + alpha - 1; >= 0 for alpha > 1 or alpha < 0,
// <= 0 on 0 < alpha < 1.
double bernoulli_residual(double u, double alpha);

}  // namespace ineq
