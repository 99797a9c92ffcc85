// Exact sparse multivariate polynomials over rationals with a fixed graded
// lexicographic term order, plus the symmetric-function layer (S1, S2, S3)
// used by the reduction pipeline. Values are immutable after construction.
#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ineq/rational.hpp"

namespace ineq {

using Exponents = std::vector<int>;

// Graded lexicographic: compare total degree first, then left-to-right.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

struct NonSymmetryWitness {
    int swap_a = 0, swap_b = 0;          // the transposition that breaks invariance
    std::vector<Rational> point;         // concrete point with p(point) != p(swapped point)
};

class NotSymmetricError : public std::invalid_argument {
  public:
    NotSymmetricError(std::string msg, NonSymmetryWitness w)
        : std::invalid_argument(std::move(msg)), witness(std::move(w)) {}
    NonSymmetryWitness witness;
};

class MultiPoly {
  public:
    static constexpr int kMaxExponent = 12;

    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(int arity);
    static MultiPoly constant(int arity, const Rational& c);
    static MultiPoly variable(int arity, int index);
    static MultiPoly monomial(int arity, Exponents e, const Rational& coeff);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial
    size_t term_count() const { return terms_.size(); }
    Rational coeff(const Exponents& e) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly pow(int e) const;

    Rational eval(std::span<const Rational> point) const;

    // Substitute variable i by images[i]; images share a common arity.
    MultiPoly compose(const std::vector<MultiPoly>& images) const;

    std::optional<NonSymmetryWitness> symmetry_witness() const;  // nullopt when symmetric
    bool is_symmetric() const { return !symmetry_witness().has_value(); }

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const;  // x, y, z, x4, x5, ... defaults
    static MultiPoly parse(const std::string& text, int arity,
                           const std::vector<std::string>& names);
    static MultiPoly parse(const std::string& text, int arity);

    // Used by the builders below; enforces the exponent cap.
    void add_term(const Exponents& e, const Rational& coeff);

  private:
    int arity_;
    TermMap terms_;
};

// Elementary symmetric polynomial e_k over the given arity.
MultiPoly elementary_symmetric(int arity, int k);

// Substitute each variable by the monomial prod_j x_j^images[i][j], where
// exponents may be negative, then clear by (x_1...x_n)^clear_power. Throws
// if any resulting exponent is negative.
MultiPoly substitute_monomials(const MultiPoly& p, const std::vector<std::vector<int>>& images,
                               int target_arity, int clear_power);

// Canonical representative modulo x_1 x_2 ... x_n = 1: each monomial is
// divided by the product raised to its minimum exponent.
MultiPoly normal_form_product_one(const MultiPoly& p);

// Polynomial in the elementary symmetric functions S1, S2, S3 of three
// variables; rep's arity-3 exponent vectors are (S1, S2, S3) powers.
struct SymPoly {
    MultiPoly rep = MultiPoly(3);

    MultiPoly expand() const;  // back to x, y, z
    Rational eval(const Rational& s1, const Rational& s2, const Rational& s3) const;
    std::string to_string() const;
    bool operator==(const SymPoly& o) const = default;
};

// Rewrite a symmetric 3-variable polynomial in S1, S2, S3 by leading-term
// elimination. Throws NotSymmetricError with a witness otherwise.
SymPoly symmetric_reduce(const MultiPoly& p);

// Replace every S3 power by 1.
SymPoly substitute_product_one(const SymPoly& sp);

}  // namespace ineq
