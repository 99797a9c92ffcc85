// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ineq/applications.hpp"
#include "ineq/family.hpp"
#include "ineq/optimizer.hpp"
#include "ineq/reduction.hpp"
#include "ineq/region.hpp"
#include "ineq/roots.hpp"
#include "json.hpp"

using ineq::ConstraintSpec;
using ineq::MemberId;
using ineq::Mode;
using ineq::Rational;
using ineq::UniPoly;
using Clock = std::chrono::steady_clock;

namespace {

struct Gate {
    int failures = 0;

    template <class F>
    void run(int n, const std::string& what, F&& body) {
        bool ok = false;
        std::string extra;
        try {
            ok = body();
        } catch (const std::exception& e) {
            extra = std::string(" [exception: ") + e.what() + "]";
        }
        std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(),
                    extra.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

bool argpoint_near_ones(const std::vector<double>& p, double tol) {
    return std::all_of(p.begin(), p.end(), [&](double v) { return near(v, 1.0, tol); });
}

std::string slurp_bytes(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_cli(const std::string& args, int threads) {
    const std::string cmd = "env INEQFORGE_THREADS=" + std::to_string(threads) + " \"" +
                            std::string(INEQFORGE_BIN) + "\" " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return raw == -1 ? -1 : WEXITSTATUS(raw);
}

// Same config rerun under 1, 4, and 13 threads; every produced file must be
// byte-identical across the reruns.
bool deterministic_under_threads(const std::string& args, const std::vector<std::string>& files,
                                 int expected_exit) {
    std::vector<std::string> baseline;
    for (int threads : {1, 4, 13}) {
        if (run_cli(args, threads) != expected_exit) return false;
        for (size_t i = 0; i < files.size(); ++i) {
            std::string bytes = slurp_bytes(files[i]);
            if (threads == 1)
                baseline.push_back(std::move(bytes));
            else if (bytes != baseline[i])
                return false;
        }
    }
    return true;
}

Rational random_rational(std::mt19937_64& eng, long num_cap) {
    const long num = static_cast<long>(eng() % static_cast<std::uint64_t>(num_cap));
    const long den = 1 + static_cast<long>(eng() % 1000000);
    return Rational(num, den);
}

}  // namespace

int main() {
    Gate gate;
    const std::filesystem::path outdir = "acceptance_out";
    std::filesystem::remove_all(outdir);
    std::filesystem::create_directories(outdir);

    gate.run(1, "symbolic pipeline reaches the frozen quadratic in under a second", [] {
        const auto t0 = Clock::now();
        const auto trace = ineq::reduce_member(MemberId::D1);
        const auto k1 = ineq::k1_polynomial();
        const bool exact = trace.k_form == k1 && (trace.k_form.rep - k1.rep).is_zero();
        const bool text = k1.to_string() ==
                          "2*S1^2 + -2*S1*S2 + 1*S2^2 + -3*S1 + -2*S2 + 6";
        return exact && text && seconds_since(t0) < 1.0;
    });

    gate.run(2, "square-plus-remainder decomposition is exact", [] {
        const auto k2 = ineq::k1_decompose();
        const auto k1 = ineq::k1_polynomial();
        const bool sums = (k2.square_part.rep + k2.remainder.rep - k1.rep).is_zero();
        const auto expanded = ineq::MultiPoly::parse(
            "1*x^2 + 1*y^2 + 1*z^2 + -3*x + -3*y + -3*z + 6", 3);
        return sums && k2.remainder_expanded == expanded;
    });

    gate.run(3, "triple bound: optimizer and one million samples agree", [] {
        const auto t0 = Clock::now();
        const auto rep = ineq::extremize(MemberId::D1, ConstraintSpec{}, Mode::SUP, 200, 42, 1e-9);
        const auto scan = ineq::sample_search(MemberId::D1, 3, 1000000, 42);
        const bool opt_ok = std::abs(rep.extremum) <= 1e-7 && rep.argpoint.size() == 3 &&
                            argpoint_near_ones(rep.argpoint, 1e-4);
        const bool scan_ok = scan.violations == 0 && scan.worst_value <= 1e-12;
        return opt_ok && scan_ok && seconds_since(t0) < 10.0;
    });

    gate.run(4, "all seven bounds peak at the all-ones point", [] {
        struct Case {
            MemberId id;
            Mode mode;
            double bound;
        };
        const Case cases[] = {{MemberId::D2, Mode::SUP, 3.0}, {MemberId::D3, Mode::SUP, 3.0},
                              {MemberId::D4, Mode::SUP, 0.0}, {MemberId::D5, Mode::INF, 1.0},
                              {MemberId::D6, Mode::SUP, 1.0}, {MemberId::D7, Mode::SUP, 2.0}};
        for (const auto& c : cases) {
            const auto rep = ineq::extremize(c.id, ConstraintSpec{}, c.mode, 200, 42, 1e-9);
            if (!near(rep.extremum, c.bound, 1e-7)) return false;
            if (!argpoint_near_ones(rep.argpoint, 1e-4)) return false;
        }
        return true;
    });

    gate.run(5, "quadruple violation: exact 1/57 cell and exit-2 witness", [&] {
        const auto cell = ineq::classify(Rational(2), Rational(2), Rational(2));
        if (cell.value != Rational(1, 57) || cell.cls != ineq::CellClass::VIOLATED) return false;

        const std::string out = (outdir / "verify_n4.json").string();
        if (run_cli("verify --member D1 --n 4 --out " + out, 0) != 2) return false;
        const auto doc = nlohmann::json::parse(slurp_bytes(out));
        if (!doc["violated"].get<bool>() || doc["witness"].is_null()) return false;
        return doc["witness"]["value"].get<double>() >= 1.0 / 57.0 - 1e-9;
    });

    gate.run(6, "root counts and the quartic barrier value are certified", [] {
        const Rational width(1, 1000000000000L);
        const UniPoly sextic({-2, 0, 3, 0, 0, -3, 2});
        const auto roots = ineq::isolate_positive_roots(sextic, width);
        if (roots.size() != 1) return false;
        const auto& r = roots[0];
        const bool at_one = r.exact_root ? (*r.exact_root == Rational(1))
                                         : (r.low < Rational(1) && Rational(1) < r.high &&
                                            r.width() <= width);
        if (!at_one) return false;
        if (ineq::count_positive_roots(UniPoly({2, 0, -3, 2})) != 0) return false;
        if (ineq::count_positive_roots(UniPoly({2, -1, 0, 2})) != 0) return false;
        const UniPoly barrier({2, 0, 0, -5, 4});
        return barrier.eval(Rational(15, 16)) == Rational(15893, 16384);
    });

    gate.run(7, "quadratic symmetric bound: exact value and minimizer", [] {
        if (ineq::lemma1_value(Rational(2), Rational(3), Rational(1, 6)) !=
            Rational(7, 2) + Rational(1, 36))
            return false;
        const auto rep = ineq::lemma1_minimize(200, 42, 1e-9);
        return std::abs(rep.extremum) <= 1e-8 && argpoint_near_ones(rep.argpoint, 1e-4);
    });

    gate.run(8, "sphere section stays nonnegative and touches at k = 1", [] {
        const auto cert = ineq::sphere_section_check(10000);
        return cert.min_gap >= -1e-12 && cert.min_within_step_of_one &&
               near(cert.g_at_one, 0.5, 1e-15) && near(cert.h_at_one, 0.5, 1e-15);
    });

    gate.run(9, "functional equation holds exactly on random rationals", [] {
        std::mt19937_64 eng(9);
        const auto& d1 = ineq::member(MemberId::D1);
        for (int i = 0; i < 1000; ++i) {
            const Rational x = random_rational(eng, 1000000) + Rational(1, 1000000);
            if (ineq::functional_eq_residual(x) != Rational(0)) return false;
            const Rational direct = ineq::eval_term(d1, x) + ineq::eval_term(d1, Rational(1) / x);
            if (ineq::pair_sum_closed_form(x) != direct) return false;
        }
        return true;
    });

    gate.run(10, "unconditional bound n/3: certificate plus exact sampling", [] {
        const auto mx = ineq::unconditional_max(ineq::member(MemberId::D1));
        if (mx.argmax != Rational(2) || mx.max_value != Rational(1, 3)) return false;
        std::mt19937_64 eng(10);
        for (int trial = 0; trial < 100000; ++trial) {
            const int n = 1 + static_cast<int>(eng() % 8);
            Rational sum(0);
            for (int k = 0; k < n; ++k) {
                const Rational x =
                    (eng() % 16 == 0) ? Rational(0) : random_rational(eng, 4000000);
                sum += ineq::eval_term(ineq::member(MemberId::D1), x);
            }
            if (sum > Rational(n, 3)) return false;
        }
        return true;
    });

    gate.run(11, "sharp constants match the independent simplex oracle", [] {
        ConstraintSpec prod;
        if (!near(ineq::best_constant(prod, 200, 42, 1e-9).constant, 1.0, 1e-6)) return false;

        ConstraintSpec free_spec;
        free_spec.product_one = false;
        if (!near(ineq::best_constant(free_spec, 200, 42, 1e-9).constant, 0.0, 1e-6))
            return false;

        ConstraintSpec simplex;
        simplex.product_one = false;
        simplex.s1_target = 1.0;
        const auto got = ineq::best_constant(simplex, 200, 42, 1e-9);

        const auto& d1 = ineq::member(MemberId::D1);
        const auto f = [&](double v) { return ineq::eval_term_d(d1, v); };
        double sup = -1e300;
        const int K = 1413;  // (K+1)(K+2)/2 > 1e6 barycentric points
        for (int i = 0; i <= K; ++i)
            for (int j = 0; j <= K - i; ++j) {
                const double x = double(i) / K, y = double(j) / K;
                sup = std::max(sup, f(x) + f(y) + f(1.0 - x - y));
            }
        const int M = 100000;  // edge refinement
        for (int k = 0; k <= M; ++k) {
            const double t = double(k) / M;
            sup = std::max(sup, f(t) + f(1.0 - t) + f(0.0));
        }
        const double oracle = 1.0 - sup;  // n/3 - sup at n = 3
        return near(got.constant, oracle, 1e-4);
    });

    gate.run(12, "pairwise-product transforms: exact certificates and numerics", [] {
        if (!ineq::lemma3_transform(ineq::TransformVariant::SWAP).certified) return false;
        if (!ineq::lemma3_transform(ineq::TransformVariant::SQUARE).certified) return false;
        std::mt19937_64 eng(12);
        std::normal_distribution<double> gauss(0.0, 0.6);
        for (int i = 0; i < 1000; ++i) {
            const double x = std::exp(gauss(eng)), y = std::exp(gauss(eng));
            const double z = 1.0 / (x * y);
            const double p = x + y + z, q = x * y + y * z + z * x;
            const double u1 = x * y, u2 = y * z, u3 = z * x;
            const double swap_p = u1 + u2 + u3, swap_q = u1 * u2 + u2 * u3 + u3 * u1;
            if (!near(swap_p, q, 1e-9 * std::max(1.0, std::abs(q)))) return false;
            if (!near(swap_q, p, 1e-9 * std::max(1.0, std::abs(p)))) return false;
            const double v1 = x * y / z, v2 = y * z / x, v3 = z * x / y;
            const double sq_p = v1 + v2 + v3, sq_q = v1 * v2 + v2 * v3 + v3 * v1;
            if (!near(sq_p, q * q - 2 * p, 1e-9 * std::max(1.0, std::abs(sq_p)))) return false;
            if (!near(sq_q, p * p - 2 * q, 1e-9 * std::max(1.0, std::abs(sq_q)))) return false;
        }
        return true;
    });

    gate.run(13, "power variants respect their Bernoulli bounds", [] {
        for (double alpha : {0.25, 0.5, 0.75}) {
            const auto d2 = ineq::extremize_power(MemberId::D2, alpha, ConstraintSpec{},
                                                  Mode::SUP, 120, 42, 1e-9);
            if (!near(d2.extremum, 3.0, 1e-6) || !argpoint_near_ones(d2.argpoint, 1e-3))
                return false;
            const auto d6 = ineq::extremize_power(MemberId::D6, alpha, ConstraintSpec{},
                                                  Mode::SUP, 120, 42, 1e-9);
            if (d6.extremum > 3.0 - 2.0 * alpha + 1e-6) return false;
            const auto d7 = ineq::extremize_power(MemberId::D7, alpha, ConstraintSpec{},
                                                  Mode::SUP, 120, 42, 1e-9);
            if (d7.extremum > 3.0 - alpha + 1e-6) return false;
        }
        const auto& d5 = ineq::member(MemberId::D5);
        std::mt19937_64 eng(13);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < 100000; ++i) {
            const double x = std::exp(gauss(eng)), y = std::exp(gauss(eng));
            const std::array<double, 3> pt{x, y, 1.0 / (x * y)};
            if (ineq::power_sum(d5, 2.0, pt) < 3.0 - 2.0 * 2.0 - 1e-12) return false;
        }
        return true;
    });

    gate.run(14, "triangles, cubics, and cyclic forms line up", [] {
        const auto& d1 = ineq::member(MemberId::D1);
        long flagged_ratio_triples = 0;
        for (std::uint64_t s = 1; s <= 10000; ++s) {
            const auto tri = ineq::random_triangle(s);
            const auto triples = ineq::triangle_triples(tri);
            for (const auto& tr : triples) {
                const double prod = tr.xyz[0] * tr.xyz[1] * tr.xyz[2];
                const bool good = std::isfinite(prod) && tr.xyz[0] > 0 && tr.xyz[1] > 0 &&
                                  tr.xyz[2] > 0 && std::abs(prod - 1.0) <= 1e-10;
                if (good != tr.accepted) return false;
                if (tr.accepted) {
                    if (std::abs(prod - 1.0) > 1e-10) return false;
                    if (ineq::eval_sum_d(d1, tr.xyz) > 1e-8) return false;
                } else if (tr.note.empty()) {
                    return false;
                }
            }
            if (!triples[5].accepted) ++flagged_ratio_triples;
        }
        if (flagged_ratio_triples < 9990) return false;
        const auto equilateral = ineq::triangle_triples(ineq::TriangleData::from_sides(1, 1, 1));
        if (equilateral[5].accepted || equilateral[5].note.empty()) return false;

        std::mt19937_64 eng(14);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (int trial = 0; trial < 1000; ++trial) {
            const double x = std::exp(2.0 * u(eng)), y = std::exp(2.0 * u(eng));
            const double z = 1.0 / (x * y);
            const Rational qa = -(Rational::from_double(x) + Rational::from_double(y) +
                                  Rational::from_double(z));
            const Rational qb = Rational::from_double(x) * Rational::from_double(y) +
                                Rational::from_double(y) * Rational::from_double(z) +
                                Rational::from_double(x) * Rational::from_double(z);
            const auto res = ineq::vieta_roots({qa, qb}, 1e-9);
            if (!res.accepted) return false;
            std::vector<double> want{x, y, z};
            std::sort(want.begin(), want.end());
            for (int i = 0; i < 3; ++i)
                if (!near(res.roots[i], want[i], 1e-8 * std::max(1.0, std::abs(want[i]))))
                    return false;
        }

        const MemberId cyclics[] = {MemberId::C15, MemberId::C16, MemberId::C17, MemberId::C18,
                                    MemberId::C19, MemberId::C20, MemberId::C21};
        std::uniform_real_distribution<double> side(0.2, 5.0);
        for (int trial = 0; trial < 1000; ++trial) {
            const double a = side(eng), b = side(eng), c = side(eng);
            for (MemberId id : cyclics) {
                const auto got = ineq::cyclic_eval(a, b, c, id);
                const auto& base = ineq::member(*ineq::member(id).cyclic_of);
                const std::array<double, 3> pt{a / b, b / c, c / a};
                const double direct = ineq::eval_sum_d(base, pt);
                if (!near(got.lhs, direct, 1e-12 * std::max(1.0, std::abs(direct))))
                    return false;
            }
        }
        return true;
    });

    gate.run(15, "printed variant split: separating witness vs exact equivalence", [] {
        const auto printed = ineq::equivalence_check(MemberId::D1, MemberId::M1_PRINTED);
        if (printed.equivalent || !printed.witness) return false;
        const std::vector<Rational> expect{Rational(2), Rational(2), Rational(1, 4)};
        if (*printed.witness != expect) return false;
        if (ineq::eval_sum(ineq::member(MemberId::M1_PRINTED), *printed.witness) !=
            Rational(38, 21))
            return false;
        if (ineq::eval_sum(ineq::member(MemberId::D1), *printed.witness) > Rational(0))
            return false;
        const auto fixed = ineq::equivalence_check(MemberId::D1, MemberId::M1_FIXED);
        return fixed.equivalent;
    });

    gate.run(16, "byte-identical outputs under 1, 4, and 13 threads", [&] {
        const auto path = [&](const char* name) { return (outdir / name).string(); };
        struct Job {
            std::string args;
            std::vector<std::string> files;
            int expected_exit;
        };
        const std::vector<Job> jobs = {
            {"verify --member D2 --n 3 --samples 50000 --starts 60 --out " + path("v.json"),
             {path("v.json")}, 0},
            {"maximize --member D1 --starts 40 --seed 7 --out " + path("m.json"),
             {path("m.json")}, 0},
            {"reduce --member D1 --check-k2 --at 2,2,1/4 --out " + path("r.json"),
             {path("r.json")}, 0},
            {"region --resolution 17 --out " + path("g.csv") + " --summary " + path("g.json"),
             {path("g.csv"), path("g.json")}, 0},
            {"constant --n 3 --product 1 --starts 40 --out " + path("c.json"),
             {path("c.json")}, 0},
            {"constant --n 3 --product 1 --starts 40 --format csv --out " + path("c.csv"),
             {path("c.csv")}, 0},
            {"triangle --count 50 --member D1 --out " + path("t.jsonl"),
             {path("t.jsonl")}, 0},
            {"roots --a=-17/4 --b=5 --out " + path("x.json"), {path("x.json")}, 0},
        };
        for (const auto& job : jobs)
            if (!deterministic_under_threads(job.args, job.files, job.expected_exit))
                return false;
        return true;
    });

    std::printf("acceptance: %d of 16 criteria passed\n", 16 - gate.failures);
    return gate.failures == 0 ? 0 : 1;
}
