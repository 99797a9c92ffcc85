#include "ineq/report_json.hpp"

#include <cmath>
#include <cstdio>

namespace ineq {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_number(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Doc::raw(const std::string& key, std::string raw_json) {
    fields.emplace_back(key, std::move(raw_json));
}
void Doc::str(const std::string& key, const std::string& value) {
    raw(key, '"' + json_escape(value) + '"');
}
void Doc::num(const std::string& key, double value) { raw(key, json_number(value)); }
void Doc::integer(const std::string& key, long long value) { raw(key, std::to_string(value)); }
void Doc::uinteger(const std::string& key, std::uint64_t value) { raw(key, std::to_string(value)); }
void Doc::boolean(const std::string& key, bool value) { raw(key, value ? "true" : "false"); }
void Doc::null(const std::string& key) { raw(key, "null"); }

std::string Doc::json() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, raw_json] : fields) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += json_escape(key);
        out += "\":";
        out += raw_json;
    }
    out += '}';
    return out;
}

std::string Doc::csv() const {
    std::string out = "key,value\n";
    for (const auto& [key, raw_json] : fields) {
        out += key;
        out += ',';
        const bool needs_quotes = raw_json.find_first_of(",\"\n") != std::string::npos;
        if (needs_quotes) {
            out += '"';
            for (char ch : raw_json) {
                out += ch;
                if (ch == '"') out += '"';
            }
            out += '"';
        } else {
            out += raw_json;
        }
        out += '\n';
    }
    return out;
}

std::string json_number_array(std::span<const double> values) {
    std::string out = "[";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += json_number(values[i]);
    }
    out += ']';
    return out;
}

namespace {

std::string constraints_json(const ConstraintSpec& spec) {
    std::string out = "{\"product\":";
    out += spec.product_one ? "true" : "false";
    out += ",\"s1\":";
    out += spec.s1_target ? json_number(*spec.s1_target) : "null";
    out += ",\"s2\":";
    out += spec.s2_target ? json_number(*spec.s2_target) : "null";
    out += '}';
    return out;
}

}  // namespace

Doc opt_report_doc(const OptReport& r) {
    Doc doc;
    doc.str("member", r.member);
    doc.integer("n", r.spec.n);
    doc.raw("constraints", constraints_json(r.spec));
    doc.str("mode", r.mode == Mode::SUP ? "SUP" : "INF");
    doc.num("extremum", r.extremum);
    doc.raw("argpoint", json_number_array(r.argpoint));
    doc.integer("starts", r.starts);
    doc.integer("converged_starts", r.converged_starts);
    doc.uinteger("seed", r.seed);
    doc.num("tolerance", r.tolerance);
    doc.num("gradient_norm", r.gradient_norm);
    return doc;
}

std::string opt_report_json(const OptReport& r) { return opt_report_doc(r).json(); }

Doc verify_report_doc(const VerifyReport& r) {
    const FamilyMember& m = member(r.member);
    Doc doc;
    doc.str("member", m.name);
    doc.integer("n", r.n);
    doc.str("relation", m.relation == Relation::LE ? "LE" : "GE");
    doc.num("bound", m.bound.to_double());
    doc.raw("opt", opt_report_doc(r.opt).json());
    doc.integer("samples", r.search.samples);
    doc.integer("violations", r.search.violations);
    doc.num("worst_value", r.search.worst_value);
    doc.raw("worst_point", json_number_array(r.search.worst_point));
    if (r.witness) {
        std::string w = "{\"point\":" + json_number_array(r.witness->first) +
                        ",\"value\":" + json_number(r.witness->second) + "}";
        doc.raw("witness", std::move(w));
    } else {
        doc.null("witness");
    }
    doc.boolean("violated", r.violated);
    doc.num("bound_gap", r.bound_gap);
    doc.integer("exit", r.exit_code);
    return doc;
}

Doc constant_report_doc(const ConstraintSpec& spec, const BestConstantResult& r) {
    Doc doc;
    doc.integer("n", spec.n);
    doc.raw("constraints", constraints_json(spec));
    doc.num("constant", r.constant);
    doc.num("sup_open", r.sup_open);
    if (r.sup_closed) doc.num("sup_closed", *r.sup_closed); else doc.null("sup_closed");
    if (r.arg_closed) doc.raw("arg_closed", json_number_array(*r.arg_closed));
    else doc.null("arg_closed");
    doc.raw("opt", opt_report_doc(r.report).json());
    return doc;
}

Doc region_summary_doc(const ScanConfig& cfg, const ScanSummary& summary,
                       const std::optional<std::string>& csv_path) {
    const char* slice = cfg.slice == SliceKind::FULL        ? "FULL"
                        : cfg.slice == SliceKind::SYMMETRIC ? "SYMMETRIC"
                                                            : "PAIR";
    Doc doc;
    doc.str("slice", slice);
    doc.str("log2_lo", cfg.log2_lo.to_string());
    doc.str("log2_hi", cfg.log2_hi.to_string());
    doc.num("window_lo", std::exp2(cfg.log2_lo.to_double()));
    doc.num("window_hi", std::exp2(cfg.log2_hi.to_double()));
    doc.integer("resolution", cfg.resolution);
    doc.integer("scale_bits", cfg.scale_bits);
    doc.integer("cells", summary.cells());
    doc.integer("satisfied", summary.satisfied);
    doc.integer("violated", summary.violated);
    doc.integer("equality", summary.equality);
    if (csv_path) doc.str("csv", *csv_path); else doc.null("csv");
    return doc;
}

Doc triangle_record_doc(const TriangleRecord& r) {
    Doc doc;
    doc.integer("triangle", r.triangle);
    doc.uinteger("task_seed", r.task_seed);
    doc.raw("sides", json_number_array(r.sides));
    doc.integer("triple", r.triple->index);
    doc.str("label", r.triple->label);
    doc.raw("xyz", json_number_array(r.triple->xyz));
    doc.num("product", r.triple->product);
    doc.num("product_residual", std::abs(r.triple->product - 1.0));
    doc.boolean("accepted", r.triple->accepted);
    doc.str("note", r.triple->note);
    doc.str("member", member(r.member).name);
    if (r.verdict) {
        doc.num("value", r.verdict->value);
        doc.boolean("satisfied", r.verdict->satisfied);
    } else {
        doc.null("value");
        doc.null("satisfied");
    }
    return doc;
}

Doc roots_report_doc(const CubicSpec& spec, double tol, const VietaResult& r) {
    Doc doc;
    doc.str("a", spec.a.to_string());
    doc.str("b", spec.b.to_string());
    doc.num("tol", tol);
    doc.boolean("accepted", r.accepted);
    doc.integer("real_roots", r.real_roots);
    doc.integer("positive_roots", r.positive_roots);
    doc.raw("roots", json_number_array(r.roots));
    doc.num("product_residual", r.product_residual);
    std::string members = "[";
    for (size_t i = 0; i < r.member_verdicts.size(); ++i) {
        if (i) members += ',';
        members += "{\"member\":\"" + json_escape(member(r.member_verdicts[i].first).name) +
                   "\",\"satisfied\":" + (r.member_verdicts[i].second ? "true" : "false") + '}';
    }
    members += ']';
    doc.raw("members", std::move(members));
    return doc;
}

Doc reduce_report_doc(const ReductionTrace& trace, const K1Decomposition& k2, bool golden_ok,
                      const std::optional<std::vector<Rational>>& at,
                      const std::optional<Rational>& value) {
    Doc doc;
    doc.str("member", member(trace.cleared.member).name);
    doc.str("cleared", trace.cleared.poly.to_string());
    doc.str("deficit", trace.deficit.to_string());
    doc.str("symmetric", trace.symmetric.to_string());
    doc.str("k_form", trace.k_form.to_string());
    doc.str("k1", k1_polynomial().to_string());
    doc.boolean("golden_ok", golden_ok);
    std::string k2_json = "{\"square\":\"" + json_escape(k2.square_part.to_string()) +
                          "\",\"remainder\":\"" + json_escape(k2.remainder.to_string()) +
                          "\",\"remainder_expanded\":\"" +
                          json_escape(k2.remainder_expanded.to_string()) + "\"}";
    doc.raw("k2", std::move(k2_json));
    if (at) {
        std::string pts = "[";
        for (size_t i = 0; i < at->size(); ++i) {
            if (i) pts += ',';
            pts += '"' + json_escape((*at)[i].to_string()) + '"';
        }
        pts += ']';
        doc.raw("at", std::move(pts));
    } else {
        doc.null("at");
    }
    if (value) doc.str("value", value->to_string()); else doc.null("value");
    return doc;
}

}  // namespace ineq
