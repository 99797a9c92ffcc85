// Exact mapping of the four-variable feasibility region: the set of positive
// 4-tuples with product 1 where the kernel sum stays nonpositive. Grid scans
// classify every cell with rational arithmetic; ray traces bisect the
// boundary with exact bracket signs.
#pragma once

#include <array>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ineq/rational.hpp"

namespace ineq {

enum class CellClass { SATISFIED, VIOLATED, EQUALITY };
const char* to_string(CellClass c);

struct RegionCell {
    std::array<Rational, 3> free_coords;
    Rational x4;     // 1/(x1 x2 x3)
    Rational value;  // exact kernel sum over all four coordinates
    CellClass cls;
};

// Exact classification; throws std::domain_error on a nonpositive coordinate.
RegionCell classify(const Rational& x1, const Rational& x2, const Rational& x3);

enum class SliceKind {
    FULL,       // three free coordinates
    SYMMETRIC,  // x1 = x2 = x3 = s, one free axis
    PAIR,       // x2 = 1/x1, x3 = 1, one free axis
};

struct ScanConfig {
    Rational log2_lo = Rational(-3);
    Rational log2_hi = Rational(3);
    int resolution = 97;
    SliceKind slice = SliceKind::FULL;
    int scale_bits = 32;  // dyadic precision of the log-space grid values
};

struct ScanSummary {
    long satisfied = 0;
    long violated = 0;
    long equality = 0;
    long cells() const { return satisfied + violated + equality; }
};

// Evaluates every cell exactly, emitting in row-major order regardless of
// how the work is scheduled; memory stays bounded (chunked waves).
ScanSummary scan_grid(const ScanConfig& cfg, const std::function<void(const RegionCell&)>& emit);

// CSV stream with header exactly: x1,x2,x3,x4,value_num,value_den,class
ScanSummary write_region_csv(const ScanConfig& cfg, std::ostream& os);

class NoSignChangeError : public std::runtime_error {
  public:
    NoSignChangeError(std::string msg, std::vector<std::pair<double, double>> s)
        : std::runtime_error(std::move(msg)), samples(std::move(s)) {}
    std::vector<std::pair<double, double>> samples;  // (parameter, kernel sum)
};

struct RayTrace {
    std::array<double, 4> anchor;
    std::array<double, 4> direction;  // log-space, zero sum
    double s_lo = 0.0, s_hi = 0.0;    // bracket with opposite exact signs
    int sign_lo = 0, sign_hi = 0;
    double crossing = 0.0;
    std::array<double, 4> point;
    double residual = 0.0;  // |kernel sum| at the crossing
};

// Walks x_k(s) = anchor_k * exp(s * direction_k) for s in [0, s_max],
// brackets a sign change (exact signs) and bisects to |sum| <= 1e-10.
RayTrace trace_boundary(const std::array<double, 4>& anchor,
                        const std::array<double, 4>& direction, double s_max);

}  // namespace ineq
