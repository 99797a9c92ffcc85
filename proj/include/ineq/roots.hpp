// Certified real root isolation over the positive axis: Descartes' rule on
// Moebius-transformed polynomials plus exact bisection. Counts are exact;
// no floating point is consulted for any sign decision.
#pragma once

#include <optional>
#include <vector>

#include "ineq/rational.hpp"
#include "ineq/unipoly.hpp"

namespace ineq {

struct RootInterval {
    Rational low, high;
    int sign_low = 0, sign_high = 0;  // exact signs of the input polynomial
    int multiplicity = 1;
    // set when the root is a rational number hit exactly during isolation
    std::optional<Rational> exact_root;

    Rational width() const { return high - low; }
    double midpoint_d() const { return (exact_root ? exact_root->to_double() : (low + high).to_double() / 2.0); }
};

// All roots in (0, oo) of the polynomial, each bracketed to at most the
// requested width, sorted ascending. Multiplicities come from the Yun
// decomposition; interval endpoints are never roots. Throws
// std::invalid_argument on the zero polynomial or width <= 0.
std::vector<RootInterval> isolate_positive_roots(const UniPoly& p, const Rational& width);

// Same machinery on (-oo, 0) via x -> -x, plus an exact test at 0;
// returns all real roots. Used by the Vieta cubic acceptance test.
std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width);

// Exact count (with multiplicity) of roots in (0, oo).
int count_positive_roots(const UniPoly& p);

// True iff p(x) > 0 for every x >= 0; certified by p(0), the leading
// coefficient, and an empty positive-root isolation.
bool positive_on_nonnegative_axis(const UniPoly& p);

// Newton refinement of an isolated simple root to double precision,
// seeded from the interval midpoint and kept inside the bracket.
double polish_root(const UniPoly& squarefree, const RootInterval& iv);

}  // namespace ineq
