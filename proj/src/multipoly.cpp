#include "ineq/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ineq {

namespace {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> default_names(int arity) {
    static const std::vector<std::string> xyz = {"x", "y", "z"};
    std::vector<std::string> names;
    for (int i = 0; i < arity; ++i)
        names.push_back(i < 3 ? xyz[i] : "x" + std::to_string(i + 1));
    return names;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

MultiPoly::MultiPoly(int arity) : arity_(arity) {
    if (arity <= 0) throw std::invalid_argument("exact_poly: arity must be positive");
}

MultiPoly MultiPoly::constant(int arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("exact_poly: variable index");
    Exponents e(arity, 0);
    e[index] = 1;
    return monomial(arity, std::move(e), Rational(1));
}

MultiPoly MultiPoly::monomial(int arity, Exponents e, const Rational& coeff) {
    MultiPoly p(arity);
    p.add_term(e, coeff);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Rational& coeff) {
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("exact_poly: exponent vector arity mismatch");
    for (int k : e) {
        if (k < 0) throw std::invalid_argument("exact_poly: negative exponent");
        if (k > kMaxExponent)
            throw std::overflow_error("exact_poly: exponent above the per-variable cap");
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("exact_poly: arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("exact_poly: arity mismatch");
    MultiPoly r(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(arity_);
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly r(arity_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("exact_poly: negative power");
    MultiPoly r = constant(arity_, Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("exact_poly: point arity mismatch");
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < arity_; ++i)
            if (e[i] > 0) t *= ineq::pow(point[i], e[i]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::compose(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != arity_)
        throw std::invalid_argument("exact_poly: compose needs one image per variable");
    const int target = images.empty() ? arity_ : images[0].arity();
    for (const MultiPoly& im : images)
        if (im.arity() != target) throw std::invalid_argument("exact_poly: image arity mismatch");

    std::vector<std::vector<MultiPoly>> pows(arity_);  // pows[i][k] = images[i]^k
    for (int i = 0; i < arity_; ++i) pows[i].push_back(constant(target, Rational(1)));

    MultiPoly r(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = constant(target, c);
        for (int i = 0; i < arity_; ++i) {
            while (static_cast<int>(pows[i].size()) <= e[i])
                pows[i].push_back(pows[i].back() * images[i]);
            if (e[i] > 0) t = t * pows[i][e[i]];
        }
        r = r + t;
    }
    return r;
}

std::optional<NonSymmetryWitness> MultiPoly::symmetry_witness() const {
    for (int i = 0; i + 1 < arity_; ++i) {
        bool invariant = true;
        for (const auto& [e, c] : terms_) {
            Exponents s = e;
            std::swap(s[i], s[i + 1]);
            if (coeff(s) != c) {
                invariant = false;
                break;
            }
        }
        if (invariant) continue;

        // The swapped polynomial differs, so a grid with more values per
        // variable than the exponent cap must contain a separating point.
        Exponents idx(arity_, 0);
        while (true) {
            std::vector<Rational> pt, sw;
            for (int k : idx) pt.emplace_back(k);
            sw = pt;
            std::swap(sw[i], sw[i + 1]);
            if (eval(pt) != eval(sw)) {
                NonSymmetryWitness w;
                w.swap_a = i;
                w.swap_b = i + 1;
                w.point = std::move(pt);
                return w;
            }
            int d = 0;
            while (d < arity_ && ++idx[d] > kMaxExponent) idx[d++] = 0;
            if (d == arity_) throw std::logic_error("exact_poly: witness grid exhausted");
        }
    }
    return std::nullopt;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != arity_)
        throw std::invalid_argument("exact_poly: name list arity mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [e, c] = *it;
        if (total_degree(e) == 0) {
            out += c.to_string();
            continue;
        }
        out += c.to_string();
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            out += "*" + names[i];
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

std::string MultiPoly::to_string() const { return to_string(default_names(arity_)); }

MultiPoly MultiPoly::parse(const std::string& text, int arity,
                           const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != arity)
        throw std::invalid_argument("exact_poly: name list arity mismatch");
    MultiPoly p(arity);
    const std::string body = trim(text);
    if (body.empty() || body == "0") return p;

    size_t pos = 0;
    while (pos != std::string::npos) {
        const size_t next = body.find(" + ", pos);
        const std::string term =
            trim(next == std::string::npos ? body.substr(pos) : body.substr(pos, next - pos));
        pos = next == std::string::npos ? next : next + 3;
        if (term.empty()) throw std::invalid_argument("exact_poly: empty term");

        Rational coeff(1);
        Exponents e(arity, 0);
        size_t fpos = 0;
        bool first = true;
        while (fpos != std::string::npos) {
            const size_t fnext = term.find('*', fpos);
            const std::string factor = trim(
                fnext == std::string::npos ? term.substr(fpos) : term.substr(fpos, fnext - fpos));
            fpos = fnext == std::string::npos ? fnext : fnext + 1;
            if (factor.empty()) throw std::invalid_argument("exact_poly: empty factor");

            const size_t caret = factor.find('^');
            const std::string base = factor.substr(0, caret);
            const auto name_it = std::find(names.begin(), names.end(), base);
            if (name_it != names.end()) {
                const int exp =
                    caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
                e[name_it - names.begin()] += exp;
            } else if (first && caret == std::string::npos) {
                coeff = Rational::from_string(factor);
            } else {
                throw std::invalid_argument("exact_poly: unknown factor '" + factor + "'");
            }
            first = false;
        }
        p.add_term(e, coeff);
    }
    return p;
}

MultiPoly MultiPoly::parse(const std::string& text, int arity) {
    return parse(text, arity, default_names(arity));
}

MultiPoly elementary_symmetric(int arity, int k) {
    if (k < 0 || k > arity) throw std::invalid_argument("exact_poly: bad elementary index");
    MultiPoly p(arity);
    if (k == 0) return MultiPoly::constant(arity, Rational(1));
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        Exponents e(arity, 0);
        for (int i : pick) e[i] = 1;
        p.add_term(e, Rational(1));
        int j = k - 1;
        while (j >= 0 && pick[j] == arity - k + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int i = j + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
    }
    return p;
}

MultiPoly substitute_monomials(const MultiPoly& p, const std::vector<std::vector<int>>& images,
                               int target_arity, int clear_power) {
    if (static_cast<int>(images.size()) != p.arity())
        throw std::invalid_argument("exact_poly: one image per variable required");
    for (const auto& im : images)
        if (static_cast<int>(im.size()) != target_arity)
            throw std::invalid_argument("exact_poly: image arity mismatch");
    MultiPoly r(target_arity);
    for (const auto& [e, c] : p.terms()) {
        Exponents out(target_arity, clear_power);
        for (int i = 0; i < p.arity(); ++i)
            for (int j = 0; j < target_arity; ++j) out[j] += e[i] * images[i][j];
        for (int v : out)
            if (v < 0)
                throw std::invalid_argument("exact_poly: clearing power too small for image");
        r.add_term(out, c);
    }
    return r;
}

MultiPoly normal_form_product_one(const MultiPoly& p) {
    MultiPoly r(p.arity());
    for (const auto& [e, c] : p.terms()) {
        const int m = *std::min_element(e.begin(), e.end());
        Exponents out = e;
        for (int& v : out) v -= m;
        r.add_term(out, c);
    }
    return r;
}

MultiPoly SymPoly::expand() const {
    if (rep.arity() != 3) throw std::logic_error("exact_poly: SymPoly arity");
    return rep.compose(
        {elementary_symmetric(3, 1), elementary_symmetric(3, 2), elementary_symmetric(3, 3)});
}

Rational SymPoly::eval(const Rational& s1, const Rational& s2, const Rational& s3) const {
    const std::vector<Rational> pt = {s1, s2, s3};
    return rep.eval(pt);
}

std::string SymPoly::to_string() const { return rep.to_string({"S1", "S2", "S3"}); }

SymPoly symmetric_reduce(const MultiPoly& p) {
    if (p.arity() != 3)
        throw std::invalid_argument("exact_poly: symmetric reduction handles three variables");
    if (auto w = p.symmetry_witness()) {
        std::string msg = "exact_poly: not symmetric under swapping variables " +
                          std::to_string(w->swap_a) + " and " + std::to_string(w->swap_b) +
                          " at point (";
        for (size_t i = 0; i < w->point.size(); ++i)
            msg += (i ? ", " : "") + w->point[i].to_string();
        msg += ")";
        throw NotSymmetricError(std::move(msg), std::move(*w));
    }

    const MultiPoly e1 = elementary_symmetric(3, 1);
    const MultiPoly e2 = elementary_symmetric(3, 2);
    const MultiPoly e3 = elementary_symmetric(3, 3);

    SymPoly out;
    MultiPoly rem = p;
    while (!rem.is_zero()) {
        const auto [lead, c] = *rem.terms().rbegin();  // by value: rem is reassigned below
        const int a = lead[0], b = lead[1], cc = lead[2];
        if (!(a >= b && b >= cc))
            throw std::logic_error("exact_poly: leading exponent of a symmetric poly not sorted");
        const MultiPoly basis = e1.pow(a - b) * e2.pow(b - cc) * e3.pow(cc);
        rem = rem - basis * c;
        out.rep.add_term({a - b, b - cc, cc}, c);
    }
    return out;
}

SymPoly substitute_product_one(const SymPoly& sp) {
    SymPoly out;
    for (const auto& [e, c] : sp.rep.terms()) out.rep.add_term({e[0], e[1], 0}, c);
    return out;
}

}  // namespace ineq
