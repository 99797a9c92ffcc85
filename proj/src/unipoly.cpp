#include "ineq/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ineq {

UniPoly::UniPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    normalize();
}

UniPoly UniPoly::from_descending_string(const std::string& csv) {
    std::vector<Rational> desc;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("unipoly: empty coefficient");
        desc.push_back(Rational::from_string(tok.substr(b, e - b + 1)));
    }
    std::vector<Rational> asc(desc.rbegin(), desc.rend());
    return UniPoly(std::move(asc));
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
    static const Rational zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("unipoly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double UniPoly::eval_d(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c_.size()) r[i] += a.c_[i];
        if (i < b.c_.size()) r[i] += b.c_[i];
    }
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return UniPoly(std::move(r));
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("unipoly: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quot;
    const int db = b.degree();
    int dr = a.degree();
    if (dr >= db) quot.assign(static_cast<size_t>(dr - db + 1), Rational(0));
    while (dr >= db) {
        Rational f = rem[static_cast<size_t>(dr)] / b.leading();
        quot[static_cast<size_t>(dr - db)] = f;
        for (int k = 0; k <= db; ++k)
            rem[static_cast<size_t>(dr - db + k)] -= f * b.coeff(k);
        rem.pop_back();
        dr = static_cast<int>(rem.size()) - 1;
        while (dr >= 0 && rem[static_cast<size_t>(dr)].is_zero() && dr >= db) {
            rem.pop_back();
            --dr;
        }
    }
    q = UniPoly(std::move(quot));
    r = UniPoly(std::move(rem));
}

UniPoly UniPoly::divexact(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("unipoly: inexact division");
    return q;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r.is_zero() ? r : r.monic();  // keep coefficients small
    }
    return x.monic();
}

UniPoly UniPoly::squarefree_part() const {
    if (degree() <= 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return monic();
    return divexact(*this, g).monic();
}

std::vector<std::pair<UniPoly, int>> UniPoly::squarefree_decomposition() const {
    // Yun's algorithm on the monic normalization; the cofactor identities
    // require w and y to stay exact quotients, so no rescaling mid-loop.
    std::vector<std::pair<UniPoly, int>> out;
    if (degree() <= 0) return out;
    const UniPoly f = monic();
    const UniPoly g = gcd(f, f.derivative());
    UniPoly w = divexact(f, g);
    UniPoly z = divexact(f.derivative(), g) - w.derivative();
    int i = 1;
    while (w.degree() > 0) {
        const UniPoly fi = gcd(w, z);
        if (fi.degree() > 0) out.emplace_back(fi, i);
        w = divexact(w, fi);
        z = divexact(z, fi) - w.derivative();
        ++i;
    }
    return out;
}

UniPoly UniPoly::shifted(const Rational& s) const {
    // in-place Taylor shift by repeated synthetic division
    if (is_zero()) return *this;
    std::vector<Rational> a = c_;
    const size_t n = a.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t j = n - 1; j-- > k;) a[j] += s * a[j + 1];
    return UniPoly(std::move(a));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> r(c_.size());
    Rational p(1);
    for (size_t i = 0; i < c_.size(); ++i) {
        r[i] = c_[i] * p;
        p *= s;
    }
    return UniPoly(std::move(r));
}

UniPoly UniPoly::reversed() const {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UniPoly(std::move(r));
}

UniPoly UniPoly::strip_zero_roots() const {
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    return UniPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& ck = coeff(k);
        if (ck.is_zero()) continue;
        if (!first) os << " + ";
        os << ck.to_string();
        if (k >= 1) {
            os << "*" << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

}  // namespace ineq
