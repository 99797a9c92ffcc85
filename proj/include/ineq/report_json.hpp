// Machine-readable run reports. Field names, order, and float formatting
// (%.17g) are frozen; two runs with equal inputs serialize byte-identically.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ineq/applications.hpp"
#include "ineq/optimizer.hpp"
#include "ineq/reduction.hpp"
#include "ineq/region.hpp"

namespace ineq {

std::string json_escape(const std::string& s);
std::string json_number(double v);  // %.17g; nan/inf become null

// Ordered flat document: raw JSON values under top-level keys. Renders as a
// JSON object or as key,value CSV lines (nested raw JSON quoted per RFC 4180).
struct Doc {
    std::vector<std::pair<std::string, std::string>> fields;

    void raw(const std::string& key, std::string raw_json);
    void str(const std::string& key, const std::string& value);
    void num(const std::string& key, double value);
    void integer(const std::string& key, long long value);
    void uinteger(const std::string& key, std::uint64_t value);
    void boolean(const std::string& key, bool value);
    void null(const std::string& key);

    std::string json() const;
    std::string csv() const;
};

std::string json_number_array(std::span<const double> values);

std::string opt_report_json(const OptReport& r);
Doc opt_report_doc(const OptReport& r);

struct VerifyReport {
    MemberId member;
    int n = 3;
    OptReport opt;
    SampleSearch search;
    bool violated = false;
    double bound_gap = 0.0;  // |extremum - bound|
    std::optional<std::pair<std::vector<double>, double>> witness;
    int exit_code = 0;
};
Doc verify_report_doc(const VerifyReport& r);

Doc constant_report_doc(const ConstraintSpec& spec, const BestConstantResult& r);

Doc region_summary_doc(const ScanConfig& cfg, const ScanSummary& summary,
                       const std::optional<std::string>& csv_path);

struct TriangleRecord {
    long triangle = 0;
    std::uint64_t task_seed = 0;
    std::array<double, 3> sides{};
    const TriangleTriple* triple = nullptr;
    MemberId member;
    std::optional<TripleVerdict> verdict;  // absent when the triple was not accepted
};
Doc triangle_record_doc(const TriangleRecord& r);

Doc roots_report_doc(const CubicSpec& spec, double tol, const VietaResult& r);

Doc reduce_report_doc(const ReductionTrace& trace, const K1Decomposition& k2, bool golden_ok,
                      const std::optional<std::vector<Rational>>& at,
                      const std::optional<Rational>& value);

}  // namespace ineq
