#include "ineq/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ineq/parallel.hpp"

namespace ineq {

namespace {

constexpr double kClampX = 1e-12;
const double kClampU = std::log(1e-12);
constexpr int kIterationCap = 10000;

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Platform-independent normal deviates: raw 53-bit uniforms + Box-Muller.
struct NormalStream {
    explicit NormalStream(std::uint64_t seed) : eng(seed) {}
    std::mt19937_64 eng;
    bool has_spare = false;
    double spare = 0.0;

    double uniform01() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

    double next() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare = r * std::sin(a);
        has_spare = true;
        return r * std::cos(a);
    }
};

double s1_of(std::span<const double> x) {
    double s = 0;
    for (double v : x) s += v;
    return s;
}

double s2_of(std::span<const double> x) {
    double s = 0;
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = i + 1; j < x.size(); ++j) s += x[i] * x[j];
    return s;
}

void project_zero_sum(std::vector<double>& u) {
    double mean = 0;
    for (double v : u) mean += v;
    mean /= static_cast<double>(u.size());
    for (double& v : u) v -= mean;
}

std::vector<double> exp_of(const std::vector<double>& u) {
    std::vector<double> x(u.size());
    for (size_t i = 0; i < u.size(); ++i) x[i] = std::exp(u[i]);
    return x;
}

// Pull toward (lambda > 0) or away from (lambda < 0) the mean, then rescale:
// the affine family keeps S1 fixed, so one scalar solve matches S2/S1^2 and a
// final scaling lands both targets.
void restore_constraints(const ConstraintSpec& spec, std::vector<double>& u) {
    if (spec.product_one) {
        project_zero_sum(u);
        return;
    }
    if (!spec.s1_target && !spec.s2_target) return;
    std::vector<double> x = exp_of(u);
    if (spec.s1_target && spec.s2_target) {
        const double t1 = *spec.s1_target, t2 = *spec.s2_target;
        const double rho_target = t2 / (t1 * t1);
        const double mean = s1_of(x) / static_cast<double>(x.size());
        auto rho_at = [&](double lambda) {
            std::vector<double> y(x.size());
            for (size_t i = 0; i < x.size(); ++i)
                y[i] = std::max(kClampX, (1.0 - lambda) * x[i] + lambda * mean);
            const double s1 = s1_of(y);
            return s2_of(y) / (s1 * s1);
        };
        double lo = 0.0, hi = 1.0;
        if (rho_at(0.0) > rho_target) {  // need more spread: lambda < 0
            lo = -1.0;
            while (rho_at(lo) > rho_target && lo > -1e6) lo *= 2.0;
            hi = 0.0;
        }
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            (rho_at(mid) < rho_target ? lo : hi) = mid;
        }
        const double lambda = 0.5 * (lo + hi);
        for (size_t i = 0; i < x.size(); ++i)
            x[i] = std::max(kClampX, (1.0 - lambda) * x[i] + lambda * mean);
        const double c = t1 / s1_of(x);
        for (double& v : x) v *= c;
    } else if (spec.s1_target) {
        const double c = *spec.s1_target / s1_of(x);
        for (double& v : x) v *= c;
    } else {
        const double c = std::sqrt(*spec.s2_target / s2_of(x));
        for (double& v : x) v *= c;
    }
    for (size_t i = 0; i < u.size(); ++i) u[i] = std::log(std::max(kClampX, x[i]));
}

// Constraint normals in u-coordinates at x = exp(u).
std::vector<std::vector<double>> constraint_normals(const ConstraintSpec& spec,
                                                    std::span<const double> x) {
    std::vector<std::vector<double>> normals;
    const size_t n = x.size();
    if (spec.product_one) normals.emplace_back(n, 1.0);
    if (spec.s1_target) {
        std::vector<double> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = x[i];
        normals.push_back(std::move(v));
    }
    if (spec.s2_target) {
        const double s1 = s1_of(x);
        std::vector<double> v(n);
        for (size_t i = 0; i < n; ++i) v[i] = x[i] * (s1 - x[i]);
        normals.push_back(std::move(v));
    }
    return normals;
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// Project g onto the intersection of the constraint tangents, restricted to
// the coordinates not pinned at the clamp (mask = true means frozen).
void project_tangent(std::vector<double>& g, std::vector<std::vector<double>> normals,
                     const std::vector<bool>& mask) {
    for (auto& nvec : normals)
        for (size_t i = 0; i < nvec.size(); ++i)
            if (mask[i]) nvec[i] = 0.0;
    for (size_t i = 0; i < g.size(); ++i)
        if (mask[i]) g[i] = 0.0;
    // Gram-Schmidt on the masked normals, then remove their components.
    std::vector<std::vector<double>> basis;
    for (auto& nvec : normals) {
        for (const auto& b : basis) {
            const double c = dot(nvec, b);
            for (size_t i = 0; i < nvec.size(); ++i) nvec[i] -= c * b[i];
        }
        const double len = norm(nvec);
        if (len > 1e-14) {
            for (double& v : nvec) v /= len;
            basis.push_back(std::move(nvec));
        }
    }
    for (const auto& b : basis) {
        const double c = dot(g, b);
        for (size_t i = 0; i < g.size(); ++i) g[i] -= c * b[i];
    }
}

struct PenaltyTerm {
    double weight = 0.0;
};

struct DescentConfig {
    bool constrain_tangent = false;  // project on constraint tangents + retract
    double penalty_weight = 0.0;     // quadratic penalty on S-targets instead
    double tol = 1e-9;
    int max_iters = 1000;
};

struct DescentState {
    std::vector<double> u;
    double value = 0.0;
    double grad_norm = 0.0;
    int iters = 0;
    bool converged = false;
};

class Problem {
  public:
    Problem(const Objective& obj, const ConstraintSpec& spec, Mode mode)
        : obj_(obj), spec_(spec), sign_(mode == Mode::SUP ? -1.0 : 1.0) {}

    // Minimized quantity: sign * objective (+ optional penalty).
    double penalized(const std::vector<double>& u, double mu) const {
        const std::vector<double> x = exp_of(u);
        double v = sign_ * obj_.value(x);
        if (mu > 0.0) {
            if (spec_.s1_target) {
                const double c = s1_of(x) - *spec_.s1_target;
                v += 0.5 * mu * c * c;
            }
            if (spec_.s2_target) {
                const double c = s2_of(x) - *spec_.s2_target;
                v += 0.5 * mu * c * c;
            }
        }
        return v;
    }

    // Gradient of the penalized quantity in u-coordinates.
    std::vector<double> grad_u(const std::vector<double>& u, double mu) const {
        const std::vector<double> x = exp_of(u);
        std::vector<double> dx(x.size());
        obj_.derivative(x, dx);
        for (double& v : dx) v *= sign_;
        if (mu > 0.0) {
            if (spec_.s1_target) {
                const double c = s1_of(x) - *spec_.s1_target;
                for (size_t i = 0; i < x.size(); ++i) dx[i] += mu * c;
            }
            if (spec_.s2_target) {
                const double c = s2_of(x) - *spec_.s2_target;
                const double s1 = s1_of(x);
                for (size_t i = 0; i < x.size(); ++i) dx[i] += mu * c * (s1 - x[i]);
            }
        }
        std::vector<double> g(x.size());
        for (size_t i = 0; i < x.size(); ++i) g[i] = dx[i] * x[i];
        return g;
    }

    std::vector<bool> clamp_mask(const std::vector<double>& u,
                                 const std::vector<double>& g) const {
        std::vector<bool> mask(u.size(), false);
        for (size_t i = 0; i < u.size(); ++i)
            mask[i] = u[i] <= kClampU + 1e-9 && g[i] > 0.0;  // step -g would push outward
        return mask;
    }

    DescentState descend(std::vector<double> u, const DescentConfig& cfg) const {
        DescentState st;
        double mu = cfg.penalty_weight;
        if (cfg.constrain_tangent) restore_constraints(spec_, u);
        double value = penalized(u, mu);
        double step = 1.0;
        int it = 0;
        for (; it < cfg.max_iters; ++it) {
            std::vector<double> g = grad_u(u, mu);
            std::vector<double> d = g;
            const std::vector<double> x = exp_of(u);
            if (cfg.constrain_tangent)
                project_tangent(d, constraint_normals(spec_, x), clamp_mask(u, g));
            else if (spec_.product_one)
                project_tangent(d, constraint_normals(spec_, x), clamp_mask(u, g));
            else
                project_tangent(d, {}, clamp_mask(u, g));
            st.grad_norm = norm(d);
            if (st.grad_norm <= cfg.tol) {
                st.converged = true;
                break;
            }
            const double slope = dot(g, d);  // decrease along -d
            bool accepted = false;
            double alpha = std::min(step * 2.0, 1.0);
            for (int bt = 0; bt < 60; ++bt) {
                std::vector<double> trial = u;
                for (size_t i = 0; i < u.size(); ++i)
                    trial[i] = std::max(kClampU, u[i] - alpha * d[i]);
                if (cfg.constrain_tangent) restore_constraints(spec_, trial);
                const double tv = penalized(trial, mu);
                if (tv <= value - 1e-4 * alpha * slope) {
                    u = std::move(trial);
                    value = tv;
                    step = alpha;
                    accepted = true;
                    break;
                }
                alpha *= 0.5;
            }
            if (!accepted) {
                st.converged = st.grad_norm <= 10.0 * cfg.tol;
                break;
            }
        }
        st.u = std::move(u);
        st.value = value;
        st.iters = it;
        return st;
    }

  private:
    const Objective& obj_;
    const ConstraintSpec& spec_;
    double sign_;
};

bool lex_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void validate_subset(const ConstraintSpec& spec) {
    if (spec.n < 2) throw std::invalid_argument("optimizer: n must be at least 2");
    if (spec.product_one && (spec.s1_target || spec.s2_target))
        throw std::invalid_argument(
            "optimizer: only the constraint subsets {product}, {S1}, {S2}, {S1,S2} are supported");
}

}  // namespace

std::vector<double> feasible_witness(const ConstraintSpec& spec) {
    validate_subset(spec);
    const int n = spec.n;
    if (spec.s1_target && *spec.s1_target <= 0.0)
        throw InfeasibleError("optimizer: S1 target must be positive");
    if (spec.s2_target && *spec.s2_target <= 0.0)
        throw InfeasibleError("optimizer: S2 target must be positive");
    if (spec.s1_target && spec.s2_target) {
        const double t1 = *spec.s1_target, t2 = *spec.s2_target;
        const double disc = t1 * t1 - 2.0 * n * t2 / (n - 1);
        if (disc < -1e-12 * t1 * t1)
            throw InfeasibleError("optimizer: no positive point has these S1 and S2");
        const double delta = (t1 - std::sqrt(std::max(0.0, disc))) / n;
        std::vector<double> w(n, delta);
        w[0] = t1 - (n - 1) * delta;
        for (double v : w)
            if (!(v > 0.0)) throw InfeasibleError("optimizer: feasible witness degenerate");
        return w;
    }
    if (spec.s1_target) return std::vector<double>(n, *spec.s1_target / n);
    if (spec.s2_target)
        return std::vector<double>(n, std::sqrt(*spec.s2_target / (0.5 * n * (n - 1))));
    return std::vector<double>(n, 1.0);  // product constraint or none
}

Objective member_objective(MemberId id, int n) {
    const FamilyMember& m = member(id);
    if (m.product_transformed && n != 3)
        throw std::invalid_argument("optimizer: product-transformed members need n = 3");
    Objective obj;
    obj.tag = m.name;
    obj.value = [&m](std::span<const double> x) { return eval_sum_d(m, x); };
    if (m.product_transformed) {
        obj.derivative = [&m](std::span<const double> x, std::span<double> out) {
            const double dxy = eval_derivative(m, x[0] * x[1]);
            const double dyz = eval_derivative(m, x[1] * x[2]);
            const double dzx = eval_derivative(m, x[2] * x[0]);
            out[0] = dxy * x[1] + dzx * x[2];
            out[1] = dxy * x[0] + dyz * x[2];
            out[2] = dyz * x[1] + dzx * x[0];
        };
    } else {
        obj.derivative = [&m](std::span<const double> x, std::span<double> out) {
            for (size_t i = 0; i < x.size(); ++i) out[i] = eval_derivative(m, x[i]);
        };
    }
    return obj;
}

Objective power_objective(MemberId base, double alpha) {
    const FamilyMember& m = member(base);
    if (m.product_transformed)
        throw std::invalid_argument("optimizer: power variants use plain members");
    Objective obj;
    obj.tag = m.name;
    obj.value = [&m, alpha](std::span<const double> x) {
        double s = 0;
        for (double v : x) s += std::pow(eval_term_d(m, v), alpha);
        return s;
    };
    obj.derivative = [&m, alpha](std::span<const double> x, std::span<double> out) {
        for (size_t i = 0; i < x.size(); ++i) {
            const double t = eval_term_d(m, x[i]);
            out[i] = alpha * std::pow(t, alpha - 1.0) * eval_derivative(m, x[i]);
        }
    };
    return obj;
}

Objective lemma1_objective() {
    Objective obj;
    obj.tag = "LEMMA1";
    obj.value = [](std::span<const double> x) {
        double s = 6.0;
        for (double v : x) s += v * v - 3.0 * v;
        return s;
    };
    obj.derivative = [](std::span<const double> x, std::span<double> out) {
        for (size_t i = 0; i < x.size(); ++i) out[i] = 2.0 * x[i] - 3.0;
    };
    return obj;
}

OptReport extremize_objective(const Objective& obj, const ConstraintSpec& spec, Mode mode,
                              int starts, std::uint64_t seed, double tol) {
    if (starts < 1) throw std::invalid_argument("optimizer: starts must be at least 1");
    if (!(tol > 0.0)) throw std::invalid_argument("optimizer: tolerance must be positive");
    const std::vector<double> witness = feasible_witness(spec);
    const int n = spec.n;
    const bool has_penalty = spec.s1_target || spec.s2_target;
    const Problem prob(obj, spec, mode);

    struct StartResult {
        double value = 0.0;
        std::vector<double> x;
        double grad_norm = 0.0;
        bool converged = false;
    };
    std::vector<StartResult> results(starts);

    parallel_for(starts, [&](long s) {
        std::vector<double> u(n);
        if (s == 0) {
            for (int i = 0; i < n; ++i) u[i] = std::log(witness[i]);
        } else {
            NormalStream rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(s))));
            for (int i = 0; i < n; ++i) u[i] = std::log(witness[i]) + rng.next();
        }
        if (spec.product_one) project_zero_sum(u);

        int budget = kIterationCap;
        if (has_penalty) {
            for (double mu = 1.0; mu <= 1e6 && budget > 0; mu *= 10.0) {
                DescentConfig cfg;
                cfg.penalty_weight = mu;
                cfg.tol = std::max(tol, 1e-6 / mu);
                cfg.max_iters = std::min(budget, 1000);
                DescentState st = prob.descend(std::move(u), cfg);
                budget -= st.iters;
                u = std::move(st.u);
            }
            restore_constraints(spec, u);
        }
        DescentConfig cfg;
        cfg.constrain_tangent = true;
        cfg.tol = tol;
        cfg.max_iters = std::max(budget, 100);
        DescentState st = prob.descend(std::move(u), cfg);

        StartResult r;
        r.x = exp_of(st.u);
        r.value = obj.value(r.x);
        r.grad_norm = st.grad_norm;
        r.converged = st.converged;
        results[s] = std::move(r);
    });

    OptReport rep;
    rep.member = obj.tag;
    rep.spec = spec;
    rep.mode = mode;
    rep.starts = starts;
    rep.seed = seed;
    rep.tolerance = tol;
    int best = 0;
    for (int s = 1; s < starts; ++s) {
        const bool better = mode == Mode::SUP ? results[s].value > results[best].value
                                              : results[s].value < results[best].value;
        if (better ||
            (results[s].value == results[best].value && lex_less(results[s].x, results[best].x)))
            best = s;
    }
    for (const StartResult& r : results) rep.converged_starts += r.converged ? 1 : 0;
    rep.extremum = results[best].value;
    rep.argpoint = results[best].x;
    rep.gradient_norm = results[best].grad_norm;
    return rep;
}

OptReport extremize(MemberId id, const ConstraintSpec& spec, Mode mode, int starts,
                    std::uint64_t seed, double tol) {
    const Objective obj = member_objective(id, spec.n);
    return extremize_objective(obj, spec, mode, starts, seed, tol);
}

OptReport extremize_power(MemberId base, double alpha, const ConstraintSpec& spec, Mode mode,
                          int starts, std::uint64_t seed, double tol) {
    const Objective obj = power_objective(base, alpha);
    return extremize_objective(obj, spec, mode, starts, seed, tol);
}

double lemma1_value(double x, double y, double z) {
    return x * x + y * y + z * z - 3.0 * (x + y + z) + 6.0;
}

Rational lemma1_value(const Rational& x, const Rational& y, const Rational& z) {
    return x * x + y * y + z * z - (x + y + z) * Rational(3) + Rational(6);
}

OptReport lemma1_minimize(int starts, std::uint64_t seed, double tol) {
    ConstraintSpec spec;
    spec.n = 3;
    spec.product_one = true;
    return extremize_objective(lemma1_objective(), spec, Mode::INF, starts, seed, tol);
}

std::vector<double> gradient(MemberId id, const ConstraintSpec& spec,
                             std::span<const double> point) {
    validate_subset(spec);
    const Objective obj = member_objective(id, static_cast<int>(point.size()));
    std::vector<double> dx(point.size());
    obj.derivative(point, dx);
    std::vector<double> g(point.size());
    std::vector<bool> mask(point.size(), false);
    for (size_t i = 0; i < point.size(); ++i) {
        g[i] = dx[i] * point[i];
        mask[i] = point[i] <= kClampX * (1.0 + 1e-6) && g[i] > 0.0;
    }
    project_tangent(g, constraint_normals(spec, point), mask);
    return g;
}

SampleSearch sample_search(MemberId id, int n, long samples, std::uint64_t seed, double slack) {
    const FamilyMember& m = member(id);
    const Objective obj = member_objective(id, n);
    const bool le = m.relation == Relation::LE;
    const double bound = m.bound.to_double();

    constexpr long kBlock = 1024;
    const long blocks = (samples + kBlock - 1) / kBlock;
    struct BlockResult {
        double worst = 0.0;
        long worst_index = -1;
        std::vector<double> worst_point;
        long violations = 0;
        long first_violation = -1;
        std::vector<double> witness;
    };
    std::vector<BlockResult> per_block(blocks);

    parallel_for(blocks, [&](long b) {
        NormalStream rng(splitmix(seed ^ splitmix(static_cast<std::uint64_t>(b) + 1)));
        BlockResult res;
        res.worst = le ? -1e300 : 1e300;
        const long lo = b * kBlock, hi = std::min(samples, lo + kBlock);
        std::vector<double> u(n), x(n);
        for (long i = lo; i < hi; ++i) {
            for (int k = 0; k < n; ++k) u[k] = rng.next();
            project_zero_sum(u);
            for (int k = 0; k < n; ++k) x[k] = std::exp(u[k]);
            const double v = obj.value(x);
            const bool worse = le ? v > res.worst : v < res.worst;
            if (worse || res.worst_index < 0) {
                res.worst = v;
                res.worst_index = i;
                res.worst_point = x;
            }
            const bool violated = le ? v > bound + slack : v < bound - slack;
            if (violated) {
                ++res.violations;
                if (res.first_violation < 0) {
                    res.first_violation = i;
                    res.witness = x;
                }
            }
        }
        per_block[b] = std::move(res);
    });

    SampleSearch out;
    out.samples = samples;
    long first = -1;
    long worst_index = -1;
    for (const BlockResult& r : per_block) {
        if (r.worst_index < 0) continue;
        out.violations += r.violations;
        const bool worse = le ? r.worst > out.worst_value : r.worst < out.worst_value;
        if (worst_index < 0 || worse) {
            out.worst_value = r.worst;
            out.worst_point = r.worst_point;
            worst_index = r.worst_index;
        }
        if (r.first_violation >= 0 && (first < 0 || r.first_violation < first)) {
            first = r.first_violation;
            out.witness = r.witness;
        }
    }
    return out;
}

namespace {

// Deterministic 1-D maximization by dense scan plus bracket shrinking.
std::pair<double, double> refine_max(const std::function<double(double)>& f, double lo, double hi,
                                     int coarse) {
    double best_t = lo, best_v = f(lo);
    for (int i = 1; i < coarse; ++i) {
        const double t = lo + (hi - lo) * i / (coarse - 1);
        const double v = f(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double a = std::max(lo, best_t - (hi - lo) / (coarse - 1));
    double b = std::min(hi, best_t + (hi - lo) / (coarse - 1));
    for (int it = 0; it < 200; ++it) {
        const double m1 = a + (b - a) / 3.0, m2 = b - (b - a) / 3.0;
        if (f(m1) < f(m2))
            a = m1;
        else
            b = m2;
    }
    const double t = 0.5 * (a + b);
    return {t, f(t)};
}

double f_d1(double x) { return eval_term_d(member(MemberId::D1), x); }

}  // namespace

BestConstantResult best_constant(const ConstraintSpec& spec, int starts, std::uint64_t seed,
                                 double tol) {
    BestConstantResult res;
    res.report = extremize(MemberId::D1, spec, Mode::SUP, starts, seed, tol);
    res.sup_open = res.report.extremum;

    const int n = spec.n;
    if (!spec.product_one && n == 3) {
        // Closed-domain pass: enumerate the boundary faces x_k = 0 exactly.
        double best = res.sup_open;
        std::vector<double> arg = res.report.argpoint;
        auto consider = [&](double v, std::vector<double> pt) {
            if (v > best) {
                best = v;
                arg = std::move(pt);
            }
        };
        if (spec.s1_target && !spec.s2_target) {
            const double t1 = *spec.s1_target;
            consider(f_d1(t1) + 2.0 * f_d1(0.0), {t1, 0.0, 0.0});
            const auto [a, v] =
                refine_max([&](double t) { return f_d1(t) + f_d1(t1 - t) + f_d1(0.0); }, 0.0, t1,
                           20001);
            consider(v, {a, t1 - a, 0.0});
        } else if (spec.s2_target && !spec.s1_target) {
            const double t2 = *spec.s2_target;
            const auto [s, v] = refine_max(
                [&](double t) {
                    const double a = std::sqrt(t2) * std::exp2(t);
                    return f_d1(a) + f_d1(t2 / a) + f_d1(0.0);
                },
                -20.0, 20.0, 20001);
            const double a = std::sqrt(t2) * std::exp2(s);
            consider(v, {a, t2 / a, 0.0});
        } else if (spec.s1_target && spec.s2_target) {
            const double t1 = *spec.s1_target, t2 = *spec.s2_target;
            const double disc = t1 * t1 - 4.0 * t2;
            if (disc >= 0.0) {
                const double r1 = 0.5 * (t1 + std::sqrt(disc));
                const double r2 = 0.5 * (t1 - std::sqrt(disc));
                if (r2 >= 0.0) consider(f_d1(r1) + f_d1(r2) + f_d1(0.0), {r1, r2, 0.0});
            }
        } else {
            // Unconstrained: the boundary only lowers the sum (each zero
            // coordinate contributes -1 < 1/3), so the interior run stands.
        }
        res.sup_closed = best;
        res.arg_closed = arg;
    }

    const double sup = res.sup_closed ? *res.sup_closed : res.sup_open;
    res.constant = static_cast<double>(n) / 3.0 - sup;
    return res;
}

StationarityCertificate lagrange_stationarity_check() {
    StationarityCertificate cert;
    // On x = y, z = x^-2 the multiplier condition lambda(x) = lambda(z) with
    // lambda(t) = 2t^2 - 3t clears x^4 into 2x^6 - 3x^5 + 3x^2 - 2.
    const UniPoly lhs_x4({0, 0, 0, 0, 0, -3, 2});     // (2x^2 - 3x) x^4
    const UniPoly rhs_x4({2, 0, -3});                 // (2x^-4 - 3x^-2) x^4
    const UniPoly cleared = lhs_x4 - rhs_x4;
    cert.slice_polynomial = UniPoly({-2, 0, 3, 0, 0, -3, 2});
    cert.identity_ok = cleared == cert.slice_polynomial;

    const auto roots = isolate_positive_roots(cert.slice_polynomial, Rational(1, 1000000));
    for (const RootInterval& iv : roots) cert.positive_root_count += iv.multiplicity;
    if (roots.size() == 1 && roots[0].exact_root) cert.root = roots[0].exact_root;

    cert.quartic = UniPoly({2, 0, 0, -5, 4});
    const UniPoly dq = cert.quartic.derivative();
    const auto droots = isolate_positive_roots(dq, Rational(1, 1024));
    if (droots.size() == 1 && droots[0].exact_root) {
        cert.quartic_critical = *droots[0].exact_root;
        cert.quartic_min_value = cert.quartic.eval(cert.quartic_critical);
    }
    cert.quartic_positive = positive_on_nonnegative_axis(cert.quartic);
    return cert;
}

namespace {

// Exact arithmetic in Q[sqrt 3] for the endpoint values of h.
struct Sqrt3 {
    Rational a, b;  // a + b*sqrt(3)
    Sqrt3 operator*(const Sqrt3& o) const {
        return {a * o.a + b * o.b * Rational(3), a * o.b + b * o.a};
    }
    Sqrt3 operator+(const Sqrt3& o) const { return {a + o.a, b + o.b}; }
    Sqrt3 operator-(const Sqrt3& o) const { return {a - o.a, b - o.b}; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
};

Sqrt3 h_exact(const Sqrt3& k) {
    const Sqrt3 k2 = k * k;
    const Sqrt3 three_k{k.a * Rational(3), k.b * Rational(3)};
    return three_k - k2 - Sqrt3{Rational(3, 2), Rational(0)};
}

}  // namespace

SphereSectionCertificate sphere_section_check(int grid) {
    if (grid < 2) throw std::invalid_argument("optimizer: grid must be at least 2");
    SphereSectionCertificate cert;
    cert.grid = grid;
    const double s3 = std::sqrt(3.0);
    const double lo = (3.0 - s3) / 2.0, hi = (3.0 + s3) / 2.0;
    const double step = (hi - lo) / (grid - 1);

    auto g = [](double k) {
        const double t = 1.0 / std::sqrt(k) - 1.5;
        return 2.0 * t * t;
    };
    auto h = [](double k) { return -k * k + 3.0 * k - 1.5; };

    cert.min_gap = 1e300;
    double prev_g = 0.0, prev_h = 0.0, prev_k = 0.0;
    bool have_prev_after_one = false;
    cert.g_increasing_after_one = true;
    cert.h_decreasing_after_one = true;
    for (int i = 0; i < grid; ++i) {
        const double k = lo + step * i;
        const double gap = g(k) - h(k);
        if (gap < cert.min_gap) {
            cert.min_gap = gap;
            cert.argmin_k = k;
        }
        if (k > 1.0) {
            if (have_prev_after_one) {
                if (g(k) < prev_g - 1e-15) cert.g_increasing_after_one = false;
                if (h(k) > prev_h + 1e-15) {
                    if (cert.h_decreasing_after_one)
                        cert.h_claim_counterexample = {prev_k, k};
                    cert.h_decreasing_after_one = false;
                }
            }
            prev_g = g(k);
            prev_h = h(k);
            prev_k = k;
            have_prev_after_one = true;
        }
    }
    cert.min_within_step_of_one = std::abs(cert.argmin_k - 1.0) <= step + 1e-12;
    cert.g_at_one = g(1.0);
    cert.h_at_one = h(1.0);

    const Sqrt3 k_hi{Rational(3, 2), Rational(1, 2)};
    const Sqrt3 k_lo{Rational(3, 2), Rational(-1, 2)};
    cert.h_endpoints_zero = h_exact(k_hi).is_zero() && h_exact(k_lo).is_zero();
    return cert;
}

}  // namespace ineq
