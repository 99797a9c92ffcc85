// The inequality family: one-variable rational terms f(x) = num(x)/den(x),
// their cyclic sums, the functional equation f(1/x) = -x f(x), and the
// certified unconditional extrema. Exact evaluation everywhere a
// certificate is involved; a parallel double path for the optimizer.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ineq/rational.hpp"
#include "ineq/unipoly.hpp"

namespace ineq {

enum class MemberId {
    D1, D2, D3, D4, D5, D6, D7,
    M1_PRINTED,  // (x^2-1)/(x^3-1) as printed; pole at x = 1
    M1_FIXED,    // (x^2-1)/(x^3+1), reduces to the D1 term
    M2, M3,
    M4, M5,      // D1/M3 terms applied to the pairwise products xy, yz, zx
    C15, C16, C17, C18, C19, C20, C21,
};

enum class Relation { LE, GE };

struct FamilyMember {
    MemberId id;
    std::string name;
    UniPoly term_num;
    UniPoly term_den;
    Relation relation;
    Rational bound;
    std::optional<double> alpha;          // power-variant exponent
    bool den_positive_on_domain;          // certified: den(x) > 0 for all x >= 0
    std::optional<MemberId> cyclic_of;    // C15..C21 -> the D member they substitute
    bool product_transformed;             // M4/M5: term applied to xy, yz, zx

    // Largest lower bound of den on x >= 0 (vertex or endpoint of the quadratic);
    // nullopt when den vanishes somewhere on the domain.
    std::optional<Rational> den_min_on_domain() const;
};

const FamilyMember& member(MemberId id);
MemberId member_from_name(const std::string& name);  // throws on unknown tag
const std::vector<MemberId>& d_members();

// Exact term value num(x)/den(x). Throws std::domain_error if x < 0 or the
// denominator vanishes at x (possible only for M1_PRINTED).
Rational eval_term(const FamilyMember& m, const Rational& x);
double eval_term_d(const FamilyMember& m, double x);

// Sum of the member's term over the coordinates. Does not check any
// product constraint; that is the caller's job.
Rational eval_sum(const FamilyMember& m, std::span<const Rational> point);
double eval_sum_d(const FamilyMember& m, std::span<const double> point);

// d/dx of the term by the quotient rule on the stored coefficients.
double eval_derivative(const FamilyMember& m, double x);
// Exact numerator of the derivative: num'*den - num*den'.
UniPoly derivative_numerator(const FamilyMember& m);

// f(1/x) + x f(x) for the D1 kernel; identically zero for x > 0.
Rational functional_eq_residual(const Rational& x);
// f(x) + f(1/x) evaluated directly and checked against the closed form
// -(x-1)^2/(x^2-x+1); both routes must agree exactly.
Rational pair_sum_closed_form(const Rational& x);

struct UnconditionalMax {
    Rational argmax;
    Rational max_value;
};

// Certified maximum of the term over x >= 0. Supported for D1 and D6 (the
// members whose maxima the family's bounds rest on); throws
// std::invalid_argument otherwise. Certification: exact isolation of the
// derivative-numerator roots plus endpoint/limit comparison.
UnconditionalMax unconditional_max(const FamilyMember& m);

// Exact maximum of the term on [lo, hi]; requires every interior critical
// point of the member in the interval to be rational.
UnconditionalMax max_on_interval(const FamilyMember& m, const Rational& lo, const Rational& hi);

}  // namespace ineq
