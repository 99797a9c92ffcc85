#include "ineq/reduction.hpp"

#include <stdexcept>

#include "ineq/roots.hpp"

namespace ineq {

namespace {

MultiPoly uni_at(const UniPoly& u, const MultiPoly& arg) {
    MultiPoly r = MultiPoly::constant(arg.arity(), Rational(0));
    for (int k = u.degree(); k >= 0; --k) r = r * arg + MultiPoly::constant(arg.arity(), u.coeff(k));
    return r;
}

std::vector<MultiPoly> term_arguments(const FamilyMember& m) {
    if (m.product_transformed)
        return {MultiPoly::monomial(3, {1, 1, 0}, Rational(1)),
                MultiPoly::monomial(3, {0, 1, 1}, Rational(1)),
                MultiPoly::monomial(3, {1, 0, 1}, Rational(1))};
    return {MultiPoly::variable(3, 0), MultiPoly::variable(3, 1), MultiPoly::variable(3, 2)};
}

MultiPoly cleared_sum_minus_bound(const UniPoly& num, const UniPoly& den, const Rational& bound,
                                  const std::vector<MultiPoly>& args) {
    std::vector<MultiPoly> nums, dens;
    for (const MultiPoly& a : args) {
        nums.push_back(uni_at(num, a));
        dens.push_back(uni_at(den, a));
    }
    MultiPoly all_dens = dens[0] * dens[1] * dens[2];
    MultiPoly acc = MultiPoly::constant(3, Rational(0));
    for (size_t i = 0; i < args.size(); ++i) {
        MultiPoly others = MultiPoly::constant(3, Rational(1));
        for (size_t j = 0; j < args.size(); ++j)
            if (j != i) others = others * dens[j];
        acc = acc + nums[i] * others;
    }
    return acc - all_dens * bound;
}

// Deficit oriented so the inequality is equivalent to deficit >= 0.
MultiPoly deficit_of(const UniPoly& num, const UniPoly& den, Relation rel, const Rational& bound,
                     const std::vector<MultiPoly>& args) {
    MultiPoly p = cleared_sum_minus_bound(num, den, bound, args);
    return rel == Relation::LE ? -p : p;
}

std::optional<Rational> positive_scale(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    const auto& [lead, ca] = *a.terms().rbegin();
    const Rational cb = b.coeff(lead);
    if (cb.is_zero()) return std::nullopt;
    const Rational s = ca / cb;
    if (s.sign() <= 0) return std::nullopt;
    if (a == b * s) return s;
    return std::nullopt;
}

MultiPoly inverted(const MultiPoly& p) {
    const std::vector<std::vector<int>> images = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    return normal_form_product_one(substitute_monomials(p, images, 3, p.degree()));
}

MultiPoly product_swapped(const MultiPoly& p) {
    const std::vector<std::vector<int>> images = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    return normal_form_product_one(substitute_monomials(p, images, 3, 0));
}

struct LowestTerms {
    UniPoly num, den;
};

LowestTerms lowest_terms(const FamilyMember& m) {
    const UniPoly g = UniPoly::gcd(m.term_num, m.term_den);
    return {UniPoly::divexact(m.term_num, g), UniPoly::divexact(m.term_den, g)};
}

bool satisfied_at(const FamilyMember& m, std::span<const Rational> point) {
    const Rational s = eval_sum(m, point);
    return m.relation == Relation::LE ? s <= m.bound : s >= m.bound;
}

}  // namespace

ClearedForm clear_denominators(const FamilyMember& m, int n) {
    if (n != 3) throw std::invalid_argument("reduction: clearing is defined for n = 3");
    ClearedForm out;
    out.member = m.id;
    out.relation = m.relation;
    out.poly = cleared_sum_minus_bound(m.term_num, m.term_den, m.bound, term_arguments(m));
    out.orientation_valid = positive_on_nonnegative_axis(m.term_den);
    if (out.orientation_valid != m.den_positive_on_domain)
        throw std::logic_error("reduction: denominator positivity disagrees with the registry");
    return out;
}

ReductionTrace reduce_member(MemberId id) {
    const FamilyMember& m = member(id);
    ReductionTrace t;
    t.cleared = clear_denominators(m, 3);
    t.deficit = m.relation == Relation::LE ? -t.cleared.poly : t.cleared.poly;
    t.symmetric = symmetric_reduce(t.deficit);
    t.k_form = substitute_product_one(t.symmetric);
    return t;
}

SymPoly k1_polynomial() {
    SymPoly k;
    k.rep.add_term({0, 2, 0}, Rational(1));
    k.rep.add_term({1, 1, 0}, Rational(-2));
    k.rep.add_term({2, 0, 0}, Rational(2));
    k.rep.add_term({1, 0, 0}, Rational(-3));
    k.rep.add_term({0, 1, 0}, Rational(-2));
    k.rep.add_term({0, 0, 0}, Rational(6));
    return k;
}

K1Decomposition k1_decompose() {
    K1Decomposition d;
    d.square_part.rep.add_term({0, 2, 0}, Rational(1));
    d.square_part.rep.add_term({1, 1, 0}, Rational(-2));
    d.square_part.rep.add_term({2, 0, 0}, Rational(1));
    d.remainder.rep.add_term({2, 0, 0}, Rational(1));
    d.remainder.rep.add_term({0, 1, 0}, Rational(-2));
    d.remainder.rep.add_term({1, 0, 0}, Rational(-3));
    d.remainder.rep.add_term({0, 0, 0}, Rational(6));

    if (!(d.square_part.rep + d.remainder.rep == k1_polynomial().rep))
        throw std::logic_error("reduction: decomposition does not sum to the K1 quadratic");

    d.remainder_expanded = d.remainder.expand();
    MultiPoly expected(3);
    expected.add_term({2, 0, 0}, Rational(1));
    expected.add_term({0, 2, 0}, Rational(1));
    expected.add_term({0, 0, 2}, Rational(1));
    expected.add_term({1, 0, 0}, Rational(-3));
    expected.add_term({0, 1, 0}, Rational(-3));
    expected.add_term({0, 0, 1}, Rational(-3));
    expected.add_term({0, 0, 0}, Rational(6));
    if (!(d.remainder_expanded == expected))
        throw std::logic_error("reduction: remainder does not expand to the quadratic deficit");
    return d;
}

MultiPoly proposition_identity(const Rational& k, PropositionVariant variant) {
    const Rational shift = variant == PropositionVariant::P1 ? Rational(1) : Rational(-1);
    std::vector<MultiPoly> factor;  // 1 + u_i  or  u_i - 1
    for (int i = 0; i < 3; ++i)
        factor.push_back(MultiPoly::variable(3, i) + MultiPoly::constant(3, shift));

    MultiPoly lhs = factor[0] * factor[1] * factor[2] * k;
    for (int i = 0; i < 3; ++i) {
        MultiPoly others = MultiPoly::constant(3, Rational(1));
        for (int j = 0; j < 3; ++j)
            if (j != i) others = others * factor[j];
        lhs = lhs - others;
    }

    const MultiPoly e1 = elementary_symmetric(3, 1);
    const MultiPoly e2 = elementary_symmetric(3, 2);
    const MultiPoly e3 = elementary_symmetric(3, 3);
    MultiPoly cubic(3);
    if (variant == PropositionVariant::P1) {
        cubic = e3 * k + e2 * (k - Rational(1)) + e1 * (k - Rational(2)) +
                MultiPoly::constant(3, k - Rational(3));
    } else {
        cubic = e3 * k - e2 * (k + Rational(1)) + e1 * (k + Rational(2)) -
                MultiPoly::constant(3, k + Rational(3));
    }
    return lhs - cubic;
}

TransformCertificate lemma3_transform(TransformVariant variant) {
    const MultiPoly p = elementary_symmetric(3, 1);
    const MultiPoly q = elementary_symmetric(3, 2);
    const MultiPoly e3 = elementary_symmetric(3, 3);

    TransformCertificate cert;
    cert.variant = variant;
    if (variant == TransformVariant::SWAP) {
        const std::vector<std::vector<int>> images = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
        const MultiPoly p_img = substitute_monomials(p, images, 3, 0);
        const MultiPoly q_img = substitute_monomials(q, images, 3, 0);
        cert.p_residual = normal_form_product_one(p_img - q);
        cert.q_residual = normal_form_product_one(q_img - p * e3);
    } else {
        const std::vector<std::vector<int>> images = {{1, 1, -1}, {-1, 1, 1}, {1, -1, 1}};
        const MultiPoly p_img = substitute_monomials(p, images, 3, p.degree());
        const MultiPoly q_img = substitute_monomials(q, images, 3, q.degree());
        cert.p_residual = normal_form_product_one(p_img - (q * q - p * Rational(2)));
        cert.q_residual = normal_form_product_one(q_img - (p * p - q * Rational(2)));
    }
    cert.certified = cert.p_residual.is_zero() && cert.q_residual.is_zero();
    return cert;
}

EquivalenceResult equivalence_check(MemberId a, MemberId b) {
    const FamilyMember& ma = member(a);
    const FamilyMember& mb = member(b);
    const LowestTerms ta = lowest_terms(ma);
    const LowestTerms tb = lowest_terms(mb);

    // Clearing preserves the inequality orientation only for certified
    // positive denominators; both reduced forms here pass or the pair goes
    // straight to the witness search.
    const bool certified =
        positive_on_nonnegative_axis(ta.den) && positive_on_nonnegative_axis(tb.den);

    if (certified) {
        const MultiPoly da = normal_form_product_one(
            deficit_of(ta.num, ta.den, ma.relation, ma.bound, term_arguments(ma)));
        const MultiPoly db = normal_form_product_one(
            deficit_of(tb.num, tb.den, mb.relation, mb.bound, term_arguments(mb)));
        struct Route {
            const char* name;
            MultiPoly transformed;
        };
        const Route routes[] = {
            {"direct", db},
            {"inverted", inverted(db)},
            {"product", product_swapped(db)},
            {"product_inverted", product_swapped(inverted(db))},
        };
        for (const Route& r : routes) {
            if (auto s = positive_scale(da, r.transformed))
                return {true, r.name, s, std::nullopt};
        }
    }

    // Deterministic separating-point search over product-one rationals.
    std::vector<std::vector<Rational>> candidates = {
        {Rational(2), Rational(2), Rational(1, 4)},
        {Rational(2), Rational(3), Rational(1, 6)},
        {Rational(1, 2), Rational(1, 2), Rational(4)},
        {Rational(3), Rational(1, 3), Rational(1)},
    };
    const std::vector<Rational> pool = {Rational(1),    Rational(2),    Rational(3),
                                        Rational(4),    Rational(5),    Rational(1, 2),
                                        Rational(1, 3), Rational(1, 4), Rational(1, 5),
                                        Rational(3, 2), Rational(2, 3), Rational(5, 2)};
    for (const Rational& p : pool)
        for (const Rational& q : pool) candidates.push_back({p, q, Rational(1) / (p * q)});

    for (const auto& pt : candidates) {
        bool ok_a = true, ok_b = true, sat_a = false, sat_b = false;
        try {
            sat_a = satisfied_at(ma, pt);
        } catch (const std::domain_error&) {
            ok_a = false;
        }
        try {
            sat_b = satisfied_at(mb, pt);
        } catch (const std::domain_error&) {
            ok_b = false;
        }
        if (ok_a && ok_b && sat_a != sat_b)
            return {false, "witness", std::nullopt, pt};
    }
    throw std::logic_error("reduction: equivalence undecided for this member pair");
}

}  // namespace ineq
