// ineqforge: reproducible runs over the inequality family. Subcommands:
// verify, maximize, reduce, region, constant, triangle, roots. Exit codes:
// 0 ok, 2 mathematical violation / unconfirmed bound, 64 usage,
// 65 infeasible constraints, 70 internal error, 74 I/O failure.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ineq/applications.hpp"
#include "ineq/family.hpp"
#include "ineq/optimizer.hpp"
#include "ineq/parallel.hpp"
#include "ineq/reduction.hpp"
#include "ineq/region.hpp"
#include "ineq/report_json.hpp"

namespace {

using namespace ineq;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInfeasible = 65;
constexpr int kExitIo = 74;
constexpr int kExitInternal = 70;

struct GlobalOptions {
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    int starts = kDefaultStarts;
    std::string out;  // empty = stdout
    std::string format = "json";
};

Rational parse_rational(const std::string& text) {
    try {
        return Rational::from_string(text);
    } catch (const std::invalid_argument&) {
        size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw;
        return Rational::from_double(v);
    }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        std::cout.flush();
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::ios_base::failure("cannot open output file: " + path);
    os << content;
    os.flush();
    if (!os) throw std::ios_base::failure("write failed: " + path);
}

std::string render(const Doc& doc, const std::string& format) {
    return format == "csv" ? doc.csv() : doc.json() + "\n";
}

int cmd_verify(const GlobalOptions& g, const std::string& member_name, int n, long samples) {
    const MemberId id = member_from_name(member_name);
    const FamilyMember& m = member(id);
    const Mode mode = m.relation == Relation::LE ? Mode::SUP : Mode::INF;

    ConstraintSpec spec;
    spec.n = n;
    VerifyReport rep;
    rep.member = id;
    rep.n = n;
    rep.opt = extremize(id, spec, mode, g.starts, g.seed, g.tol);
    rep.search = sample_search(id, n, samples, g.seed);

    const double bound = m.bound.to_double();
    const double slack = 1e-9;
    const bool opt_violates = m.relation == Relation::LE ? rep.opt.extremum > bound + slack
                                                         : rep.opt.extremum < bound - slack;
    rep.violated = opt_violates || rep.search.violations > 0;
    rep.bound_gap = std::abs(rep.opt.extremum - bound);
    if (opt_violates) {
        rep.witness = {rep.opt.argpoint, rep.opt.extremum};
    } else if (rep.search.witness) {
        std::vector<double> pt = *rep.search.witness;
        rep.witness = {pt, eval_sum_d(m, pt)};
    }
    rep.exit_code = rep.violated ? kExitViolation : (rep.bound_gap <= 1e-6 ? kExitOk : kExitViolation);

    write_output(g.out, render(verify_report_doc(rep), g.format));
    std::fprintf(stderr, "verify %s n=%d: extremum %.9g (bound %.9g), sample violations %ld, exit %d\n",
                 m.name.c_str(), n, rep.opt.extremum, bound, rep.search.violations, rep.exit_code);
    return rep.exit_code;
}

int cmd_maximize(const GlobalOptions& g, const std::string& member_name, int n, bool product,
                 const std::optional<double>& s1, const std::optional<double>& s2,
                 const std::string& mode_name) {
    const MemberId id = member_from_name(member_name);
    ConstraintSpec spec;
    spec.n = n;
    spec.product_one = product;
    spec.s1_target = s1;
    spec.s2_target = s2;
    const Mode mode = mode_name == "inf" ? Mode::INF : Mode::SUP;
    const OptReport rep = extremize(id, spec, mode, g.starts, g.seed, g.tol);
    write_output(g.out, render(opt_report_doc(rep), g.format));
    std::fprintf(stderr, "maximize %s n=%d %s: extremum %.12g, %d/%d starts converged\n",
                 rep.member.c_str(), n, mode == Mode::SUP ? "sup" : "inf", rep.extremum,
                 rep.converged_starts, rep.starts);
    return kExitOk;
}

int cmd_reduce(const GlobalOptions& g, const std::string& member_name, bool check_k2,
               const std::string& at_text) {
    const MemberId id = member_from_name(member_name);
    const ReductionTrace trace = reduce_member(id);
    const K1Decomposition k2 = k1_decompose();  // self-certifying; throws on failure
    (void)check_k2;

    bool golden_ok = true;
    if (id == MemberId::D1) {
        golden_ok = trace.k_form == k1_polynomial();
        if (!golden_ok) throw std::logic_error("reduce: D1 pipeline no longer matches the frozen quadratic");
    }

    std::optional<std::vector<Rational>> at;
    std::optional<Rational> value;
    if (!at_text.empty()) {
        at = parse_rational_list(at_text);
        if (at->size() != 3) throw std::invalid_argument("--at needs exactly three comma-separated rationals");
        value = trace.deficit.eval(std::span<const Rational>(at->data(), at->size()));
    }

    write_output(g.out, render(reduce_report_doc(trace, k2, golden_ok, at, value), g.format));
    std::fprintf(stderr, "reduce %s: k-form %s\n", member(id).name.c_str(),
                 trace.k_form.to_string().c_str());
    return kExitOk;
}

int cmd_region(const GlobalOptions& g, int resolution, const std::string& slice_name,
               const std::string& lo_text, const std::string& hi_text, int scale_bits,
               std::string summary_path) {
    ScanConfig cfg;
    cfg.resolution = resolution;
    cfg.log2_lo = parse_rational(lo_text);
    cfg.log2_hi = parse_rational(hi_text);
    cfg.scale_bits = scale_bits;
    if (slice_name == "full") cfg.slice = SliceKind::FULL;
    else if (slice_name == "symmetric") cfg.slice = SliceKind::SYMMETRIC;
    else if (slice_name == "pair") cfg.slice = SliceKind::PAIR;
    else throw std::invalid_argument("--slice must be full, symmetric, or pair");

    const std::string csv_path = g.out.empty() ? "region.csv" : g.out;
    if (summary_path.empty()) summary_path = csv_path + ".summary.json";

    std::ostringstream csv;
    const ScanSummary summary = write_region_csv(cfg, csv);
    write_output(csv_path, csv.str());
    write_output(summary_path, region_summary_doc(cfg, summary, csv_path).json() + "\n");
    std::printf("region %s resolution %d: %ld cells, %ld satisfied, %ld violated, %ld equality -> %s\n",
                slice_name.c_str(), resolution, summary.cells(), summary.satisfied,
                summary.violated, summary.equality, csv_path.c_str());
    return kExitOk;
}

int cmd_constant(const GlobalOptions& g, int n, bool product, const std::optional<double>& s1,
                 const std::optional<double>& s2) {
    ConstraintSpec spec;
    spec.n = n;
    spec.product_one = product;
    spec.s1_target = s1;
    spec.s2_target = s2;
    const BestConstantResult res = best_constant(spec, g.starts, g.seed, g.tol);
    write_output(g.out, render(constant_report_doc(spec, res), g.format));
    std::fprintf(stderr, "constant n=%d: C = %.9g (sup %.9g)\n", n, res.constant,
                 res.sup_closed ? *res.sup_closed : res.sup_open);
    return kExitOk;
}

int cmd_triangle(const GlobalOptions& g, long count, const std::vector<std::string>& member_names) {
    std::vector<MemberId> ids;
    for (const std::string& name : member_names) ids.push_back(member_from_name(name));
    if (ids.empty()) ids.push_back(MemberId::D1);

    struct Task {
        std::string lines;
        long accepted = 0;
        long flagged = 0;
    };
    std::vector<Task> tasks(static_cast<size_t>(count));
    parallel_for(count, [&](long i) {
        Task& task = tasks[static_cast<size_t>(i)];
        const std::uint64_t task_seed = mix_seed(g.seed ^ mix_seed(static_cast<std::uint64_t>(i) + 1));
        const TriangleData t = random_triangle(task_seed);
        const auto triples = triangle_triples(t);
        for (MemberId id : ids) {
            const auto verdicts = run_family_on_triples(t, id);
            for (const TriangleTriple& triple : triples) {
                TriangleRecord rec;
                rec.triangle = i;
                rec.task_seed = task_seed;
                rec.sides = {t.a, t.b, t.c};
                rec.triple = &triple;
                rec.member = id;
                for (const TripleVerdict& v : verdicts)
                    if (v.index == triple.index) rec.verdict = v;
                task.lines += triangle_record_doc(rec).json();
                task.lines += '\n';
            }
        }
        for (const TriangleTriple& triple : triples)
            (triple.accepted ? task.accepted : task.flagged) += 1;
    });

    std::string out;
    long accepted = 0, flagged = 0;
    for (const Task& task : tasks) {
        out += task.lines;
        accepted += task.accepted;
        flagged += task.flagged;
    }
    write_output(g.out, out);
    std::fprintf(stderr, "triangle %ld triangles: %ld accepted triples, %ld flagged\n", count,
                 accepted, flagged);
    return kExitOk;
}

int cmd_roots(const GlobalOptions& g, const std::string& a_text, const std::string& b_text) {
    CubicSpec spec{parse_rational(a_text), parse_rational(b_text)};
    const VietaResult res = vieta_roots(spec, std::max(g.tol, 1e-12));
    write_output(g.out, render(roots_report_doc(spec, std::max(g.tol, 1e-12), res), g.format));
    if (res.accepted) {
        std::fprintf(stderr, "roots t^3 + (%s) t^2 + (%s) t - 1: accepted, roots %.12g %.12g %.12g\n",
                     spec.a.to_string().c_str(), spec.b.to_string().c_str(), res.roots[0],
                     res.roots[1], res.roots[2]);
    } else {
        std::fprintf(stderr, "roots t^3 + (%s) t^2 + (%s) t - 1: rejected (%d real, %d positive)\n",
                     spec.a.to_string().c_str(), spec.b.to_string().c_str(), res.real_roots,
                     res.positive_roots);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ineqforge: verification and optimization workbench for a family of cyclic rational inequalities"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand name

    GlobalOptions g;
    app.add_option("--seed", g.seed, "master RNG seed")->capture_default_str();
    app.add_option("--tol", g.tol, "optimizer tolerance")->capture_default_str();
    app.add_option("--starts", g.starts, "multi-start count")->capture_default_str();
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "sample + extremize a member against its bound");
    std::string v_member = "D1";
    int v_n = 3;
    long v_samples = 100000;
    verify->add_option("--member", v_member, "family member tag")->capture_default_str();
    verify->add_option("--n", v_n, "tuple length")->capture_default_str();
    verify->add_option("--samples", v_samples, "seeded feasible samples")->capture_default_str();

    auto* maximize = app.add_subcommand("maximize", "extremize a member under constraints");
    std::string m_member = "D1", m_mode = "sup";
    int m_n = 3;
    bool m_product = true;
    std::optional<double> m_s1, m_s2;
    maximize->add_option("--member", m_member)->capture_default_str();
    maximize->add_option("--n", m_n)->capture_default_str();
    maximize->add_flag("--product,!--no-product", m_product, "constrain the product to 1")
        ->capture_default_str();
    maximize->add_option("--s1", m_s1, "target for S1");
    maximize->add_option("--s2", m_s2, "target for S2");
    maximize->add_option("--mode", m_mode)->check(CLI::IsMember({"sup", "inf"}))
        ->capture_default_str();

    auto* reduce = app.add_subcommand("reduce", "denominator clearing and symmetric reduction");
    std::string r_member = "D1", r_at;
    bool r_check_k2 = false;
    reduce->add_option("--member", r_member)->capture_default_str();
    reduce->add_flag("--check-k2", r_check_k2, "certify the square-plus-remainder split");
    reduce->add_option("--at", r_at, "evaluate the deficit at x,y,z (exact rationals)");

    auto* region = app.add_subcommand("region", "exact grid classification of the kernel sum");
    int re_resolution = 97, re_scale_bits = 32;
    std::string re_slice = "full", re_lo = "-3", re_hi = "3", re_summary;
    region->add_option("--resolution", re_resolution)->capture_default_str();
    region->add_option("--slice", re_slice)->check(CLI::IsMember({"full", "symmetric", "pair"}))
        ->capture_default_str();
    region->add_option("--log2-lo", re_lo, "window lower edge, log2 scale")->capture_default_str();
    region->add_option("--log2-hi", re_hi, "window upper edge, log2 scale")->capture_default_str();
    region->add_option("--scale-bits", re_scale_bits)->capture_default_str();
    region->add_option("--summary", re_summary, "summary JSON path (default <out>.summary.json)");

    auto* constant = app.add_subcommand("constant", "sharp constant under the given constraints");
    int c_n = 3;
    int c_product = 1;
    std::optional<double> c_s1, c_s2;
    constant->add_option("--n", c_n)->capture_default_str();
    constant->add_option("--product", c_product, "1 = product constrained to 1, 0 = free")
        ->check(CLI::Range(0, 1))->capture_default_str();
    constant->add_option("--s1", c_s1, "target for S1");
    constant->add_option("--s2", c_s2, "target for S2");

    auto* triangle = app.add_subcommand("triangle", "product-one triples from random triangles");
    long t_count = 100;
    std::vector<std::string> t_members;
    triangle->add_option("--count", t_count)->capture_default_str();
    triangle->add_option("--member", t_members, "family member tags (repeatable)");

    auto* roots = app.add_subcommand("roots", "positive roots of t^3 + a t^2 + b t - 1");
    std::string ro_a, ro_b;
    roots->add_option("--a", ro_a)->required();
    roots->add_option("--b", ro_b)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(g, v_member, v_n, v_samples);
        if (app.got_subcommand(maximize))
            return cmd_maximize(g, m_member, m_n, m_product, m_s1, m_s2, m_mode);
        if (app.got_subcommand(reduce)) return cmd_reduce(g, r_member, r_check_k2, r_at);
        if (app.got_subcommand(region))
            return cmd_region(g, re_resolution, re_slice, re_lo, re_hi, re_scale_bits, re_summary);
        if (app.got_subcommand(constant)) return cmd_constant(g, c_n, c_product == 1, c_s1, c_s2);
        if (app.got_subcommand(triangle)) return cmd_triangle(g, t_count, t_members);
        if (app.got_subcommand(roots)) return cmd_roots(g, ro_a, ro_b);
        std::fprintf(stderr, "no subcommand\n");
        return kExitUsage;
    } catch (const InfeasibleError& e) {
        std::fprintf(stderr, "infeasible: %s\n", e.what());
        return kExitInfeasible;
    } catch (const std::ios_base::failure& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitInternal;
    }
}
