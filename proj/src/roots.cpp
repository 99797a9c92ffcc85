#include "ineq/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ineq {

namespace {

int sign_variations(const UniPoly& p) {
    int v = 0, last = 0;
    for (const Rational& c : p.coeffs()) {
        const int s = c.sign();
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// Number of roots of p in (a, b) as seen by Descartes' rule applied to the
// Moebius transform mapping (0, oo) onto (a, b): the answers 0 and 1 are exact.
int descartes_test(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.degree() <= 0) return 0;
    UniPoly r = p.shifted(a).scaled(b - a);  // carries (0,1) to (a,b)
    UniPoly q = r.reversed().shifted(Rational(1));
    return sign_variations(q);
}

// Power-of-two upper bound for all positive roots (Cauchy bound).
Rational positive_root_bound(const UniPoly& p) {
    const Rational lead = abs(p.leading());
    Rational m(0);
    for (int k = 0; k < p.degree(); ++k) m = std::max(m, abs(p.coeff(k)));
    Rational bound = Rational(1) + m / lead;
    Rational b(1);
    while (b < bound) b *= Rational(2);
    return b;
}

struct IsolatedRoot {
    Rational low, high;             // open interval around exactly one root of local
    std::optional<Rational> exact;  // the root itself when it is rational
    UniPoly local;                  // squarefree poly at isolation time; a, b are not its roots
};

UniPoly linear_factor(const Rational& root) {
    return UniPoly(std::vector<Rational>{-root, Rational(1)});
}

// Precondition: a, b are not roots of s; s squarefree.
void isolate_squarefree(UniPoly s, const Rational& a, const Rational& b,
                        std::vector<IsolatedRoot>& out) {
    if (s.degree() <= 0) return;
    const int v = descartes_test(s, a, b);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({a, b, std::nullopt, s});
        return;
    }
    const Rational mid = (a + b) / Rational(2);
    if (s.eval(mid).is_zero()) {
        out.push_back({a, b, mid, s});
        s = UniPoly::divexact(s, linear_factor(mid));  // halves see only the rest
    }
    isolate_squarefree(s, a, mid, out);
    isolate_squarefree(s, mid, b, out);
}

int multiplicity_of(const std::vector<std::pair<UniPoly, int>>& factors,
                    const std::optional<Rational>& exact, const Rational& lo,
                    const Rational& hi) {
    for (const auto& [f, mult] : factors) {
        if (exact) {
            if (f.eval(*exact).is_zero()) return mult;
        } else if (f.eval(lo).sign() * f.eval(hi).sign() < 0) {
            return mult;
        }
    }
    throw std::logic_error("roots: isolated root matches no squarefree factor");
}

// Window [r-h, r+h] certified to contain no root of s other than r itself.
void shrink_exact_window(const UniPoly& s, const Rational& r, const Rational& lo_limit,
                         const Rational& hi_limit, Rational& h) {
    const UniPoly rest = UniPoly::divexact(s, linear_factor(r));
    while (r - h <= lo_limit || r + h >= hi_limit || s.eval(r - h).is_zero() ||
           s.eval(r + h).is_zero() || descartes_test(rest, r - h, r + h) != 0)
        h /= Rational(2);
}

std::vector<RootInterval> finalize(const UniPoly& p, const UniPoly& s,
                                   std::vector<IsolatedRoot> raw, const Rational& width) {
    const auto factors = p.squarefree_decomposition();
    const Rational half = width / Rational(2);

    std::vector<RootInterval> out;
    for (IsolatedRoot& r : raw) {
        Rational lo = r.low, hi = r.high;
        if (!r.exact) {
            // Bisect against the local poly (its endpoints are never roots);
            // also push past endpoints that deflation left as roots of s.
            const int sign_lo = r.local.eval(lo).sign();
            while (hi - lo > width || s.eval(lo).is_zero() || s.eval(hi).is_zero()) {
                const Rational mid = (lo + hi) / Rational(2);
                const int sm = r.local.eval(mid).sign();
                if (sm == 0) {
                    r.exact = mid;
                    break;
                }
                if (sm == sign_lo)
                    lo = mid;
                else
                    hi = mid;
            }
        }
        if (r.exact) {
            Rational h = half;
            shrink_exact_window(s, *r.exact, r.low, r.high, h);
            lo = *r.exact - h;
            hi = *r.exact + h;
        }
        RootInterval iv;
        iv.low = lo;
        iv.high = hi;
        iv.exact_root = r.exact;
        iv.sign_low = p.eval(lo).sign();
        iv.sign_high = p.eval(hi).sign();
        iv.multiplicity = multiplicity_of(factors, r.exact, lo, hi);
        out.push_back(std::move(iv));
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.low < y.low; });
    return out;
}

}  // namespace

std::vector<RootInterval> isolate_positive_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    if (width.sign() <= 0) throw std::invalid_argument("roots: width must be positive");
    const UniPoly stripped = p.strip_zero_roots();  // roots at 0 are not positive
    if (stripped.degree() <= 0) return {};
    const UniPoly s = stripped.squarefree_part();
    std::vector<IsolatedRoot> raw;
    isolate_squarefree(s, Rational(0), positive_root_bound(s), raw);
    return finalize(stripped, s, std::move(raw), width);
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Rational& width) {
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    std::vector<RootInterval> out;

    // negative axis: roots of p(-x) in (0, oo), mirrored back
    const UniPoly neg = p.scaled(Rational(-1));
    if (neg.strip_zero_roots().degree() > 0) {
        for (const RootInterval& iv : isolate_positive_roots(neg, width)) {
            RootInterval m;
            m.low = -iv.high;
            m.high = -iv.low;
            m.sign_low = iv.sign_high;
            m.sign_high = iv.sign_low;
            m.multiplicity = iv.multiplicity;
            if (iv.exact_root) m.exact_root = -*iv.exact_root;
            out.push_back(std::move(m));
        }
    }

    if (p.eval(Rational(0)).is_zero()) {
        const UniPoly stripped = p.strip_zero_roots();
        const UniPoly s = stripped.degree() > 0 ? stripped.squarefree_part() : stripped;
        RootInterval z;
        z.exact_root = Rational(0);
        z.multiplicity = p.degree() - stripped.degree();
        Rational h = width / Rational(2);
        if (s.degree() > 0) {
            while (s.eval(h).is_zero() || s.eval(-h).is_zero() ||
                   descartes_test(s, Rational(0), h) != 0 ||
                   descartes_test(s.scaled(Rational(-1)), Rational(0), h) != 0)
                h /= Rational(2);
        }
        z.low = -h;
        z.high = h;
        z.sign_low = p.eval(z.low).sign();
        z.sign_high = p.eval(z.high).sign();
        out.push_back(std::move(z));
    }

    for (RootInterval& iv : isolate_positive_roots(p, width)) out.push_back(std::move(iv));
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.low < y.low; });
    return out;
}

int count_positive_roots(const UniPoly& p) {
    int n = 0;
    for (const RootInterval& iv : isolate_positive_roots(p, Rational(1, 4))) n += iv.multiplicity;
    return n;
}

bool positive_on_nonnegative_axis(const UniPoly& p) {
    if (p.is_zero()) return false;
    if (p.eval(Rational(0)).sign() <= 0) return false;
    if (p.leading().sign() <= 0) return false;
    return isolate_positive_roots(p, Rational(1, 4)).empty();
}

double polish_root(const UniPoly& squarefree, const RootInterval& iv) {
    if (iv.exact_root) return iv.exact_root->to_double();
    const UniPoly d = squarefree.derivative();
    const int sign_lo = squarefree.eval(iv.low).sign();
    double lo = iv.low.to_double(), hi = iv.high.to_double();
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double f = squarefree.eval_d(x);
        const double df = d.eval_d(x);
        double next = (df != 0.0) ? x - f / df : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const int s = squarefree.eval(Rational::from_double(next)).sign();
        if (s == 0) return next;
        if (s == sign_lo)
            lo = next;
        else
            hi = next;
        if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x))) return next;
        x = next;
    }
    return x;
}

}  // namespace ineq
