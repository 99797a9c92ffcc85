#include "ineq/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ineq {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    q_ = mpq_class(n, d);
    q_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    q_ = mpq_class(n) / mpq_class(d);
    q_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), x);
    return Rational(q);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::to_string() const { return q_.get_str(); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (x.is_zero()) throw std::domain_error("rational: 0 to negative power");
        return pow(Rational(1) / x, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

Rational dyadic_exp2(const Rational& t, unsigned scale_bits) {
    // t = m + c/d with 0 <= c < d; then 2^t * 2^S = (2^((m+S)d+c))^(1/d).
    mpz_class m, c;
    mpz_fdiv_qr(m.get_mpz_t(), c.get_mpz_t(), t.num().get_mpz_t(), t.den().get_mpz_t());
    const mpz_class d = t.den();
    long mi = m.get_si();
    long scale = static_cast<long>(scale_bits);
    if (mi + scale < 0) scale = -mi;  // keep the exponent nonnegative
    const unsigned long dl = d.get_ui();
    mpz_class e = (m + scale) * d + c;

    mpz_class p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, e.get_ui());
    mpz_class root;
    mpz_root(root.get_mpz_t(), p2.get_mpz_t(), dl);
    // round to nearest: root+1 wins iff (2*root+1)^d <= 2^(e+d)
    mpz_class half, lhs;
    half = 2 * root + 1;
    mpz_pow_ui(lhs.get_mpz_t(), half.get_mpz_t(), dl);
    mpz_class rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), 2, mpz_class(e + d).get_ui());
    if (lhs <= rhs) root += 1;

    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, static_cast<unsigned long>(scale));
    return Rational(root, denom);
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace ineq
