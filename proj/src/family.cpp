#include "ineq/family.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "ineq/roots.hpp"

namespace ineq {

namespace {

FamilyMember make(MemberId id, std::string name, std::vector<Rational> num,
                  std::vector<Rational> den, Relation rel, Rational bound,
                  bool den_positive, std::optional<MemberId> cyclic_of = std::nullopt,
                  bool product_transformed = false) {
    FamilyMember m;
    m.id = id;
    m.name = std::move(name);
    m.term_num = UniPoly(std::move(num));
    m.term_den = UniPoly(std::move(den));
    m.relation = rel;
    m.bound = std::move(bound);
    m.alpha = std::nullopt;
    m.den_positive_on_domain = den_positive;
    m.cyclic_of = cyclic_of;
    m.product_transformed = product_transformed;
    return m;
}

std::vector<Rational> rc(std::initializer_list<long> v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (long x : v) out.emplace_back(x);
    return out;
}

const std::vector<FamilyMember>& registry() {
    static const std::vector<FamilyMember> reg = [] {
        const auto denA = rc({1, -1, 1});  // x^2 - x + 1
        const auto denB = rc({1, 1, 1});   // x^2 + x + 1
        std::vector<FamilyMember> r;
        r.push_back(make(MemberId::D1, "D1", rc({-1, 1}), denA, Relation::LE, Rational(0), true));
        r.push_back(make(MemberId::D2, "D2", rc({1}), denA, Relation::LE, Rational(3), true));
        r.push_back(make(MemberId::D3, "D3", rc({0, 1}), denA, Relation::LE, Rational(3), true));
        r.push_back(make(MemberId::D4, "D4", rc({-1, 1}), denB, Relation::LE, Rational(0), true));
        r.push_back(make(MemberId::D5, "D5", rc({1}), denB, Relation::GE, Rational(1), true));
        r.push_back(make(MemberId::D6, "D6", rc({0, 1}), denB, Relation::LE, Rational(1), true));
        r.push_back(make(MemberId::D7, "D7", rc({1, 1}), denB, Relation::LE, Rational(2), true));
        r.push_back(make(MemberId::M1_PRINTED, "M1_PRINTED", rc({-1, 0, 1}), rc({-1, 0, 0, 1}),
                         Relation::LE, Rational(0), false));
        r.push_back(make(MemberId::M1_FIXED, "M1_FIXED", rc({-1, 0, 1}), rc({1, 0, 0, 1}),
                         Relation::LE, Rational(0), true));
        r.push_back(make(MemberId::M2, "M2", rc({0, 0, 1}), denA, Relation::LE, Rational(3), true));
        r.push_back(make(MemberId::M3, "M3", rc({0, 1, -1}), denA, Relation::LE, Rational(0), true));
        r.push_back(make(MemberId::M4, "M4", rc({-1, 1}), denA, Relation::LE, Rational(0), true,
                         std::nullopt, true));
        r.push_back(make(MemberId::M5, "M5", rc({0, 1, -1}), denA, Relation::LE, Rational(0), true,
                         std::nullopt, true));
        const MemberId base[] = {MemberId::D1, MemberId::D2, MemberId::D3, MemberId::D4,
                                 MemberId::D5, MemberId::D6, MemberId::D7};
        const MemberId cyc[] = {MemberId::C15, MemberId::C16, MemberId::C17, MemberId::C18,
                                MemberId::C19, MemberId::C20, MemberId::C21};
        for (int i = 0; i < 7; ++i) {
            const FamilyMember& b = r[static_cast<size_t>(base[i])];
            r.push_back(make(cyc[i], "C" + std::to_string(15 + i), b.term_num.coeffs(),
                             b.term_den.coeffs(), b.relation, b.bound, b.den_positive_on_domain,
                             base[i]));
        }
        return r;
    }();
    return reg;
}

Rational eval_den_checked(const FamilyMember& m, const Rational& x) {
    if (x.sign() < 0) throw std::domain_error("family: argument below the domain x >= 0");
    Rational d = m.term_den.eval(x);
    if (d.is_zero()) throw std::domain_error("family: denominator of " + m.name + " vanishes");
    return d;
}

}  // namespace

std::optional<Rational> FamilyMember::den_min_on_domain() const {
    if (!den_positive_on_domain) return std::nullopt;
    Rational best = term_den.eval(Rational(0));
    const UniPoly d = term_den.derivative();
    if (d.degree() >= 1) {
        for (const RootInterval& iv : isolate_positive_roots(d, Rational(1, 4))) {
            if (!iv.exact_root)
                throw std::logic_error("family: irrational critical point of a denominator");
            best = std::min(best, term_den.eval(*iv.exact_root));
        }
    }
    return best;  // leading coefficient positive, so no infimum escapes to infinity
}

const FamilyMember& member(MemberId id) { return registry()[static_cast<size_t>(id)]; }

MemberId member_from_name(const std::string& name) {
    static const std::map<std::string, MemberId> names = [] {
        std::map<std::string, MemberId> n;
        for (const FamilyMember& m : registry()) n.emplace(m.name, m.id);
        n.emplace("M1", MemberId::M1_PRINTED);  // bare tag means the published form
        return n;
    }();
    const auto it = names.find(name);
    if (it == names.end()) throw std::invalid_argument("family: unknown member tag " + name);
    return it->second;
}

const std::vector<MemberId>& d_members() {
    static const std::vector<MemberId> ids = {MemberId::D1, MemberId::D2, MemberId::D3,
                                              MemberId::D4, MemberId::D5, MemberId::D6,
                                              MemberId::D7};
    return ids;
}

Rational eval_term(const FamilyMember& m, const Rational& x) {
    const Rational d = eval_den_checked(m, x);
    return m.term_num.eval(x) / d;
}

double eval_term_d(const FamilyMember& m, double x) {
    return m.term_num.eval_d(x) / m.term_den.eval_d(x);
}

Rational eval_sum(const FamilyMember& m, std::span<const Rational> point) {
    if (m.product_transformed) {
        if (point.size() != 3)
            throw std::invalid_argument("family: product-transformed members need exactly n = 3");
        const Rational xy = point[0] * point[1];
        const Rational yz = point[1] * point[2];
        const Rational zx = point[2] * point[0];
        return eval_term(m, xy) + eval_term(m, yz) + eval_term(m, zx);
    }
    Rational s(0);
    for (const Rational& x : point) s += eval_term(m, x);
    return s;
}

double eval_sum_d(const FamilyMember& m, std::span<const double> point) {
    if (m.product_transformed) {
        if (point.size() != 3)
            throw std::invalid_argument("family: product-transformed members need exactly n = 3");
        return eval_term_d(m, point[0] * point[1]) + eval_term_d(m, point[1] * point[2]) +
               eval_term_d(m, point[2] * point[0]);
    }
    double s = 0.0;
    for (double x : point) s += eval_term_d(m, x);
    return s;
}

double eval_derivative(const FamilyMember& m, double x) {
    const double den = m.term_den.eval_d(x);
    const double num = m.term_num.eval_d(x);
    const double dden = m.term_den.derivative().eval_d(x);
    const double dnum = m.term_num.derivative().eval_d(x);
    return (dnum * den - num * dden) / (den * den);
}

UniPoly derivative_numerator(const FamilyMember& m) {
    return m.term_num.derivative() * m.term_den - m.term_num * m.term_den.derivative();
}

Rational functional_eq_residual(const Rational& x) {
    if (x.sign() <= 0) throw std::domain_error("family: functional equation needs x > 0");
    const FamilyMember& d1 = member(MemberId::D1);
    return eval_term(d1, Rational(1) / x) + x * eval_term(d1, x);
}

Rational pair_sum_closed_form(const Rational& x) {
    if (x.sign() <= 0) throw std::domain_error("family: pair sum needs x > 0");
    const FamilyMember& d1 = member(MemberId::D1);
    const Rational direct = eval_term(d1, x) + eval_term(d1, Rational(1) / x);
    const Rational t = x - Rational(1);
    const Rational closed = -(t * t) / (x * x - x + Rational(1));
    if (direct != closed) throw std::logic_error("family: pair sum identity failed");
    return direct;
}

UnconditionalMax unconditional_max(const FamilyMember& m) {
    if (m.id != MemberId::D1 && m.id != MemberId::D6)
        throw std::invalid_argument("family: unconditional maximum certified only for D1 and D6");
    // Denominator positive on the whole domain, so the term is smooth there:
    // the maximum is at x = 0, at a critical point, or in the limit x -> oo.
    std::vector<Rational> candidates = {Rational(0)};
    for (const RootInterval& iv : isolate_positive_roots(derivative_numerator(m), Rational(1, 4))) {
        if (!iv.exact_root) throw std::logic_error("family: irrational critical point");
        candidates.push_back(*iv.exact_root);
    }
    Rational limit(0);  // deg num < deg den for both supported members
    if (m.term_num.degree() == m.term_den.degree())
        limit = m.term_num.leading() / m.term_den.leading();
    UnconditionalMax best{candidates[0], eval_term(m, candidates[0])};
    for (size_t i = 1; i < candidates.size(); ++i) {
        const Rational v = eval_term(m, candidates[i]);
        if (v > best.max_value) best = {candidates[i], v};
    }
    if (best.max_value < limit)
        throw std::logic_error("family: supremum at infinity is not attained");
    return best;
}

UnconditionalMax max_on_interval(const FamilyMember& m, const Rational& lo, const Rational& hi) {
    if (lo.sign() < 0 || lo >= hi) throw std::invalid_argument("family: bad interval");
    std::vector<Rational> candidates = {lo, hi};
    const UniPoly dnum = derivative_numerator(m);
    if (dnum.degree() >= 1) {
        for (const RootInterval& iv : isolate_real_roots(dnum, Rational(1, 4))) {
            if (iv.high <= lo || iv.low >= hi) {
                if (iv.exact_root && *iv.exact_root > lo && *iv.exact_root < hi)
                    candidates.push_back(*iv.exact_root);
                continue;
            }
            if (!iv.exact_root)
                throw std::invalid_argument("family: irrational critical point in the interval");
            if (*iv.exact_root > lo && *iv.exact_root < hi) candidates.push_back(*iv.exact_root);
        }
    }
    UnconditionalMax best{candidates[0], eval_term(m, candidates[0])};
    for (size_t i = 1; i < candidates.size(); ++i) {
        const Rational v = eval_term(m, candidates[i]);
        if (v > best.max_value) best = {candidates[i], v};
    }
    return best;
}

}  // namespace ineq
