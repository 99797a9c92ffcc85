#include "ineq/applications.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>

#include "ineq/roots.hpp"

namespace ineq {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kProductTol = 1e-10;

double clamped_acos(double q) { return std::acos(std::min(1.0, std::max(-1.0, q))); }

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

TriangleData TriangleData::from_sides(double a, double b, double c) {
    if (!(a > 0) || !(b > 0) || !(c > 0)) throw std::domain_error("triangle: sides must be positive");
    if (!(a + b > c) || !(b + c > a) || !(a + c > b))
        throw std::domain_error("triangle: strict triangle inequality violated");

    TriangleData t;
    t.a = a;
    t.b = b;
    t.c = c;
    t.p = (a + b + c) / 2.0;

    // Kahan's stable Heron form: sort x >= y >= z first.
    double x = a, y = b, z = c;
    if (x < y) std::swap(x, y);
    if (y < z) std::swap(y, z);
    if (x < y) std::swap(x, y);
    t.area = 0.25 * std::sqrt((x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z)));

    t.r = t.area / t.p;
    t.R = a * b * c / (4.0 * t.area);
    t.h_a = 2.0 * t.area / a;
    t.h_b = 2.0 * t.area / b;
    t.h_c = 2.0 * t.area / c;
    t.alpha = clamped_acos((b * b + c * c - a * a) / (2.0 * b * c));
    t.beta = clamped_acos((a * a + c * c - b * b) / (2.0 * a * c));
    t.gamma = clamped_acos((a * a + b * b - c * c) / (2.0 * a * b));
    return t;
}

TriangleData random_triangle(std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    const auto uniform = [&eng] { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    for (;;) {
        const double a = 0.1 + 9.9 * uniform();
        const double b = 0.1 + 9.9 * uniform();
        const double c = 0.1 + 9.9 * uniform();
        if (a + b > c && b + c > a && a + c > b) return TriangleData::from_sides(a, b, c);
    }
}

std::vector<TriangleTriple> triangle_triples(const TriangleData& t) {
    const double p = t.p, r = t.r, R = t.R;
    const double ta = std::tan(t.alpha), tb = std::tan(t.beta), tc = std::tan(t.gamma);
    const double tan_sum = ta + tb + tc;

    std::vector<TriangleTriple> out;
    const auto add = [&out](int index, std::string label, double x, double y, double z) {
        TriangleTriple tr;
        tr.index = index;
        tr.label = std::move(label);
        tr.xyz = {x, y, z};
        tr.product = x * y * z;
        if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
            tr.note = "nonfinite coordinate";
        } else if (!(x > 0) || !(y > 0) || !(z > 0)) {
            tr.note = "nonpositive coordinate";
        } else if (!(std::abs(tr.product - 1.0) <= kProductTol)) {
            tr.note = "product deviates from 1 by " + format_double(tr.product - 1.0);
        } else {
            tr.accepted = true;
        }
        out.push_back(std::move(tr));
    };

    add(1, "a/(4p), b/R, c/r", t.a / (4 * p), t.b / R, t.c / r);
    add(2, "(a+b)/2, (b+c)/p, (a+c)/(p^2+r^2+2rR)", (t.a + t.b) / 2, (t.b + t.c) / p,
        (t.a + t.c) / (p * p + r * r + 2 * r * R));
    add(3, "R h_a, h_b/(2p^2), h_c/r^2", R * t.h_a, t.h_b / (2 * p * p), t.h_c / (r * r));
    add(4, "2R^2 sin(A), sin(B)/r, sin(C)/p", 2 * R * R * std::sin(t.alpha),
        std::sin(t.beta) / r, std::sin(t.gamma) / p);
    add(5, "(p^2-4R^2-4rR-r^2) tan(A), tan(B)/(2p), tan(C)/r",
        (p * p - 4 * R * R - 4 * r * R - r * r) * ta, tb / (2 * p), tc / r);
    add(6, "tan(A)/T, tan(B)/T, tan(C)/T with T = tan(A)+tan(B)+tan(C)", ta / tan_sum,
        tb / tan_sum, tc / tan_sum);
    add(7, "tan(A/2), p tan(B/2), tan(C/2)/r", std::tan(t.alpha / 2), p * std::tan(t.beta / 2),
        std::tan(t.gamma / 2) / r);
    add(8, "a/(4(p-a)), b/(R(p-b)), r c/(p-c)", t.a / (4 * (p - t.a)), t.b / (R * (p - t.b)),
        r * t.c / (p - t.c));
    add(9, "4R sin(A/2), sin(B/2), sin(C/2)/r", 4 * R * std::sin(t.alpha / 2),
        std::sin(t.beta / 2), std::sin(t.gamma / 2) / r);
    add(10, "4R cos(A/2), cos(B/2), cos(C/2)/p", 4 * R * std::cos(t.alpha / 2),
        std::cos(t.beta / 2), std::cos(t.gamma / 2) / p);
    return out;
}

std::vector<TripleVerdict> run_family_on_triples(const TriangleData& t, MemberId id,
                                                 double slack) {
    const FamilyMember& m = member(id);
    std::vector<TripleVerdict> verdicts;
    for (const TriangleTriple& tr : triangle_triples(t)) {
        if (!tr.accepted) continue;
        TripleVerdict v;
        v.index = tr.index;
        v.value = eval_sum_d(m, std::span<const double>(tr.xyz.data(), tr.xyz.size()));
        const double bound = m.bound.to_double();
        v.satisfied = (m.relation == Relation::LE) ? v.value <= bound + slack
                                                   : v.value >= bound - slack;
        verdicts.push_back(v);
    }
    return verdicts;
}

namespace {

// num(u/v) / den(u/v) cleared by v^D with D = max degree, evaluated directly.
double homogenized_term(const FamilyMember& m, double u, double v) {
    const int D = std::max(m.term_num.degree(), m.term_den.degree());
    double hn = 0.0, hd = 0.0, up = 1.0;
    std::vector<double> vpow(static_cast<size_t>(D) + 1, 1.0);
    for (int i = 1; i <= D; ++i) vpow[static_cast<size_t>(i)] = vpow[static_cast<size_t>(i - 1)] * v;
    for (int i = 0; i <= D; ++i) {
        if (i <= m.term_num.degree()) hn += m.term_num.coeff(i).to_double() * up * vpow[static_cast<size_t>(D - i)];
        if (i <= m.term_den.degree()) hd += m.term_den.coeff(i).to_double() * up * vpow[static_cast<size_t>(D - i)];
        up *= u;
    }
    return hn / hd;
}

}  // namespace

CyclicValue cyclic_eval(double a, double b, double c, MemberId id) {
    const FamilyMember& m = member(id);
    if (!m.cyclic_of) throw std::invalid_argument("cyclic_eval: member is not a cyclic form");
    if (!(a > 0) || !(b > 0) || !(c > 0))
        throw std::domain_error("cyclic_eval: arguments must be positive");
    const FamilyMember& base = member(*m.cyclic_of);

    CyclicValue cv;
    cv.lhs = homogenized_term(base, a, b) + homogenized_term(base, b, c) +
             homogenized_term(base, c, a);

    const std::array<double, 3> point{a / b, b / c, c / a};
    const double direct = eval_sum_d(base, std::span<const double>(point.data(), point.size()));
    if (!(std::abs(direct - cv.lhs) <= 1e-12 * std::max(1.0, std::abs(cv.lhs))))
        throw std::logic_error("cyclic_eval: homogenized and substituted values disagree");

    const double bound = m.bound.to_double();
    const double slack = 1e-12 * std::max(1.0, std::abs(bound));
    cv.satisfied = (m.relation == Relation::LE) ? cv.lhs <= bound + slack
                                                : cv.lhs >= bound - slack;
    return cv;
}

VietaResult vieta_roots(const CubicSpec& spec, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("vieta_roots: tolerance must be positive");
    const UniPoly cubic({Rational(-1), spec.b, spec.a, Rational(1)});
    const auto windows = isolate_real_roots(cubic, Rational(1, 1000000000000L));

    VietaResult res;
    for (const RootInterval& iv : windows) {
        res.real_roots += iv.multiplicity;
        const bool positive = iv.exact_root ? iv.exact_root->sign() > 0 : iv.low.sign() >= 0;
        if (positive) res.positive_roots += iv.multiplicity;
    }
    if (res.positive_roots != 3) return res;

    res.accepted = true;
    const UniPoly sf = cubic.squarefree_part();
    for (const RootInterval& iv : windows) {
        const bool positive = iv.exact_root ? iv.exact_root->sign() > 0 : iv.low.sign() >= 0;
        if (!positive) continue;
        const double value = iv.exact_root ? iv.exact_root->to_double() : polish_root(sf, iv);
        for (int k = 0; k < iv.multiplicity; ++k) res.roots.push_back(value);
    }
    std::sort(res.roots.begin(), res.roots.end());
    res.product_residual = std::abs(res.roots[0] * res.roots[1] * res.roots[2] - 1.0);
    if (!(res.product_residual <= tol))
        throw std::logic_error("vieta_roots: isolated root product strays from 1");

    for (MemberId id : d_members()) {
        const FamilyMember& m = member(id);
        const double value = eval_sum_d(m, std::span<const double>(res.roots.data(), res.roots.size()));
        const double bound = m.bound.to_double();
        const bool ok = (m.relation == Relation::LE) ? value <= bound + tol : value >= bound - tol;
        res.member_verdicts.emplace_back(id, ok);
    }
    return res;
}

namespace {

void check_power_regime(MemberId id, double alpha) {
    switch (id) {
        case MemberId::D2:
        case MemberId::D6:
        case MemberId::D7:
            if (!(alpha > 0.0 && alpha < 1.0))
                throw std::invalid_argument("power variant: this member needs 0 < alpha < 1");
            return;
        case MemberId::D5:
            if (!(alpha > 1.0 || alpha < 0.0))
                throw std::invalid_argument("power variant: this member needs alpha > 1 or alpha < 0");
            return;
        default:
            throw std::invalid_argument("power variant: defined for D2, D5, D6, D7 only");
    }
}

}  // namespace

std::pair<double, Relation> power_bound(MemberId id, double alpha) {
    check_power_regime(id, alpha);
    switch (id) {
        case MemberId::D2: return {3.0, Relation::LE};
        case MemberId::D6: return {3.0 - 2.0 * alpha, Relation::LE};
        case MemberId::D7: return {3.0 - alpha, Relation::LE};
        case MemberId::D5: return {3.0 - 2.0 * alpha, Relation::GE};
        default: throw std::invalid_argument("power variant: unreachable");
    }
}

double power_sum(const FamilyMember& m, double alpha, std::span<const double> point) {
    check_power_regime(m.id, alpha);
    double sum = 0.0;
    for (double x : point) sum += std::pow(eval_term_d(m, x), alpha);
    return sum;
}

double bernoulli_residual(double u, double alpha) {
    if (!(u > 0)) throw std::domain_error("bernoulli_residual: u must be positive");
    return std::pow(u, alpha) - alpha * u + alpha - 1.0;
}

}  // namespace ineq
