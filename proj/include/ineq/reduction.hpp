// The symbolic pipeline: clear denominators over n = 3, rewrite the
// (symmetric) deficit in elementary symmetric functions, collapse the
// product constraint, and the algebraic identity certificates built on it.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ineq/family.hpp"
#include "ineq/multipoly.hpp"

namespace ineq {

struct ClearedForm {
    MemberId member;
    MultiPoly poly = MultiPoly(3);  // sum of terms minus bound, times all denominators
    Relation relation;              // orientation of poly against 0
    bool orientation_valid;         // denominators certified positive on x >= 0
};

// n must be 3. The returned polynomial P satisfies: the member inequality is
// equivalent to (P relation 0) whenever orientation_valid.
ClearedForm clear_denominators(const FamilyMember& m, int n);

struct ReductionTrace {
    ClearedForm cleared;
    MultiPoly deficit = MultiPoly(3);  // oriented so the inequality reads deficit >= 0
    SymPoly symmetric;                 // deficit rewritten in S1, S2, S3
    SymPoly k_form;                    // after S3 := 1
};

ReductionTrace reduce_member(MemberId id);

// S2^2 - 2 S1 S2 + 2 S1^2 - 3 S1 - 2 S2 + 6, the frozen target of the
// reduction pipeline; reduce_member(D1).k_form must equal it.
SymPoly k1_polynomial();

struct K1Decomposition {
    SymPoly square_part;            // (S2 - S1)^2
    SymPoly remainder;              // S1^2 - 2 S2 - 3 S1 + 6
    MultiPoly remainder_expanded = MultiPoly(3);  // x^2+y^2+z^2 - 3(x+y+z) + 6
};

// Certifies square_part + remainder == k1_polynomial() and the stated
// expansion of the remainder; throws std::logic_error if either fails.
K1Decomposition k1_decompose();

enum class PropositionVariant { P1, P2 };

// Difference between k*prod(1+-u) - sum_i prod_{j != i}(1+-u_j) and the
// stated cubic form; identically zero for every k. P1 uses (1+u), P2 (u-1).
MultiPoly proposition_identity(const Rational& k, PropositionVariant variant);

enum class TransformVariant { SWAP, SQUARE };

struct TransformCertificate {
    TransformVariant variant;
    MultiPoly p_residual = MultiPoly(3);  // image of S1 minus its claimed form, mod product = 1
    MultiPoly q_residual = MultiPoly(3);  // same for S2
    bool certified;                       // both residuals identically zero
};

// SWAP: (x,y,z) -> (xy, yz, zx) carries (p,q) to (q, p) modulo xyz = 1.
// SQUARE: (x,y,z) -> (xy/z, yz/x, zx/y) carries (p,q) to (q^2-2p, p^2-2q).
TransformCertificate lemma3_transform(TransformVariant variant);

struct EquivalenceResult {
    bool equivalent;
    std::string route;  // "direct", "inverted", "product", "product_inverted", or "witness"
    std::optional<Rational> scale;                 // positive constant relating cleared forms
    std::optional<std::vector<Rational>> witness;  // product-one point separating the members
};

// Two members are equivalent when their cleared deficits agree up to a
// positive constant modulo xyz = 1, directly or after the inversion or
// pairwise-product change of variables (each maps the constraint surface
// onto itself). Terms are put in lowest terms before clearing.
EquivalenceResult equivalence_check(MemberId a, MemberId b);

}  // namespace ineq
