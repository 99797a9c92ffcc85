// Univariate polynomials with exact rational coefficients: the scalar
// kernels' numerators/denominators, stationarity polynomials, and the
// input format of the root isolator.
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ineq/rational.hpp"

namespace ineq {

class UniPoly {
public:
    UniPoly() = default;
    // Coefficients in ascending order: c[0] + c[1] x + ...
    explicit UniPoly(std::vector<Rational> ascending);
    UniPoly(std::initializer_list<long> ascending);

    // Parses descending integer/rational coefficient lists like "2,-3,0,0,3,0,-2"
    // (the order polynomials are written in prose).
    static UniPoly from_descending_string(const std::string& csv);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const Rational& coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    Rational eval(const Rational& x) const;
    double eval_d(double x) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Quotient and remainder; divisor must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // Exact division; throws if the remainder is nonzero.
    static UniPoly divexact(const UniPoly& a, const UniPoly& b);

    UniPoly monic() const;
    // Monic gcd by the Euclidean algorithm.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    // p / gcd(p, p'): same roots, all simple.
    UniPoly squarefree_part() const;
    // Yun decomposition: returns (factor, multiplicity) pairs with
    // p = lc * prod factor_i^mult_i, each factor squarefree and monic.
    std::vector<std::pair<UniPoly, int>> squarefree_decomposition() const;

    // p(x + s): exact Taylor shift.
    UniPoly shifted(const Rational& s) const;
    // p(s * x).
    UniPoly scaled(const Rational& s) const;
    // x^deg * p(1/x) (coefficient reversal).
    UniPoly reversed() const;

    // Numerator of p(1/x) cleared by x^deg, with any x-power content removed;
    // used when rewriting a rational function under x -> 1/x.
    UniPoly inverted_cleared() const { return reversed().strip_zero_roots(); }
    // Divides out the highest power of x (drops roots at zero).
    UniPoly strip_zero_roots() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void normalize();
    std::vector<Rational> c_;
};

}  // namespace ineq
