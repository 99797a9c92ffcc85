// Multi-start extremization of family sums over the product-one manifold
// (log-coordinates, zero-sum hyperplane) with optional S1/S2 targets by
// quadratic penalty, plus the certified stationarity and sphere-section
// checks and the sharp-constant computation.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ineq/family.hpp"
#include "ineq/rational.hpp"
#include "ineq/roots.hpp"
#include "ineq/unipoly.hpp"

namespace ineq {

class InfeasibleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ConstraintSpec {
    int n = 3;
    bool product_one = true;
    std::optional<double> s1_target;
    std::optional<double> s2_target;

    bool any_active() const { return product_one || s1_target || s2_target; }
};

// Validates n >= 2, the implemented constraint subsets (product alone, or
// S1/S2 targets without the product), and the existence of a strictly
// positive feasible witness; returns one. Throws InfeasibleError otherwise.
std::vector<double> feasible_witness(const ConstraintSpec& spec);

enum class Mode { SUP, INF };

struct OptReport {
    std::string member;
    ConstraintSpec spec;
    Mode mode = Mode::SUP;
    double extremum = 0.0;
    std::vector<double> argpoint;
    int starts = 0;
    int converged_starts = 0;
    std::uint64_t seed = 0;
    double tolerance = 0.0;
    double gradient_norm = 0.0;
};

inline constexpr int kDefaultStarts = 200;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr double kDefaultTol = 1e-9;

// Objective over strictly positive coordinates; derivative is with respect
// to the coordinates themselves (the optimizer applies the log chain rule).
struct Objective {
    std::string tag;
    std::function<double(std::span<const double>)> value;
    std::function<void(std::span<const double>, std::span<double>)> derivative;
};

Objective member_objective(MemberId id, int n);
Objective power_objective(MemberId base, double alpha);  // sum of term(x_k)^alpha
Objective lemma1_objective();

OptReport extremize_objective(const Objective& obj, const ConstraintSpec& spec, Mode mode,
                              int starts = kDefaultStarts, std::uint64_t seed = kDefaultSeed,
                              double tol = kDefaultTol);
OptReport extremize(MemberId id, const ConstraintSpec& spec, Mode mode,
                    int starts = kDefaultStarts, std::uint64_t seed = kDefaultSeed,
                    double tol = kDefaultTol);
OptReport extremize_power(MemberId base, double alpha, const ConstraintSpec& spec, Mode mode,
                          int starts = kDefaultStarts, std::uint64_t seed = kDefaultSeed,
                          double tol = kDefaultTol);

double lemma1_value(double x, double y, double z);
Rational lemma1_value(const Rational& x, const Rational& y, const Rational& z);
OptReport lemma1_minimize(int starts = kDefaultStarts, std::uint64_t seed = kDefaultSeed,
                          double tol = kDefaultTol);

// Gradient of the member sum in log-coordinates at the point, projected onto
// the tangent space of the active constraints (reduced on the clamp box).
std::vector<double> gradient(MemberId id, const ConstraintSpec& spec,
                             std::span<const double> point);

// Seeded feasible sampling (log-normal projected onto the constraint) that
// hunts for values beyond the member bound.
struct SampleSearch {
    long samples = 0;
    long violations = 0;
    double worst_value = 0.0;              // largest sum for LE, smallest for GE
    std::vector<double> worst_point;
    std::optional<std::vector<double>> witness;  // first violating point
};
SampleSearch sample_search(MemberId id, int n, long samples, std::uint64_t seed,
                           double slack = 1e-12);

struct BestConstantResult {
    double constant = 0.0;     // n/3 minus the supremum actually used
    OptReport report;          // interior multi-start run
    double sup_open = 0.0;     // supremum over strictly positive points
    std::optional<double> sup_closed;  // corner/edge pass on the closed domain (n = 3)
    std::optional<std::vector<double>> arg_closed;
};
BestConstantResult best_constant(const ConstraintSpec& spec, int starts = kDefaultStarts,
                                 std::uint64_t seed = kDefaultSeed, double tol = kDefaultTol);

// The Lagrange slice x = y, z = 1/x^2 of the lemma1_minimize objective:
// clearing x^4 from the stationarity condition yields 2x^6 - 3x^5 + 3x^2 - 2,
// whose only positive root is 1; plus the quartic barrier 4x^4 - 5x^3 + 2.
struct StationarityCertificate {
    UniPoly slice_polynomial;
    bool identity_ok = false;
    int positive_root_count = 0;
    std::optional<Rational> root;       // exact root when rational
    UniPoly quartic;
    Rational quartic_critical;          // 15/16
    Rational quartic_min_value;         // 15893/16384
    bool quartic_positive = false;      // no positive roots and positive at 0
};
StationarityCertificate lagrange_stationarity_check();

// Section of the sphere tangency argument: g(k) = 2(1/sqrt(k) - 3/2)^2
// against h(k) = -k^2 + 3k - 3/2 on [(3-sqrt 3)/2, (3+sqrt 3)/2].
struct SphereSectionCertificate {
    int grid = 0;
    double min_gap = 0.0;      // min of g - h over the grid
    double argmin_k = 0.0;
    bool min_within_step_of_one = false;
    double g_at_one = 0.0;     // 1/2
    double h_at_one = 0.0;     // 1/2
    bool h_endpoints_zero = false;      // exact arithmetic in Q[sqrt 3]
    bool g_increasing_after_one = false;
    bool h_decreasing_after_one = false;  // the claim as stated; refuted
    std::optional<std::array<double, 2>> h_claim_counterexample;  // (k, k') with h rising
};
SphereSectionCertificate sphere_section_check(int grid);

}  // namespace ineq
