#include "ineq/region.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include "ineq/parallel.hpp"

namespace ineq {
namespace {

// f(x) = (x - 1) / (x^2 - x + 1), exact.
Rational kernel(const Rational& x) {
    return (x - Rational(1)) / (x * x - x + Rational(1));
}

CellClass class_of(const Rational& value) {
    const int s = value.sign();
    if (s < 0) return CellClass::SATISFIED;
    if (s > 0) return CellClass::VIOLATED;
    return CellClass::EQUALITY;
}

// Grid values 2^t for t equally spaced in [lo, hi]. A degenerate window
// (lo == hi) collapses to a single point.
std::vector<Rational> axis_values(const ScanConfig& cfg) {
    if (cfg.resolution < 1) throw std::invalid_argument("region: resolution must be positive");
    std::vector<Rational> vals;
    if (cfg.log2_lo == cfg.log2_hi || cfg.resolution == 1) {
        vals.push_back(dyadic_exp2(cfg.log2_lo, cfg.scale_bits));
        return vals;
    }
    if (cfg.log2_lo > cfg.log2_hi) throw std::invalid_argument("region: window is reversed");
    const Rational step = (cfg.log2_hi - cfg.log2_lo) / Rational(cfg.resolution - 1);
    vals.reserve(cfg.resolution);
    for (int i = 0; i < cfg.resolution; ++i)
        vals.push_back(dyadic_exp2(cfg.log2_lo + step * Rational(i), cfg.scale_bits));
    return vals;
}

long cell_count(const ScanConfig& cfg, size_t axis) {
    const long n = static_cast<long>(axis);
    switch (cfg.slice) {
        case SliceKind::FULL: return n * n * n;
        case SliceKind::SYMMETRIC:
        case SliceKind::PAIR: return n;
    }
    throw std::logic_error("region: unknown slice kind");
}

RegionCell cell_at(const ScanConfig& cfg, const std::vector<Rational>& axis, long index) {
    const long n = static_cast<long>(axis.size());
    switch (cfg.slice) {
        case SliceKind::FULL: {
            const long i3 = index % n, i2 = (index / n) % n, i1 = index / (n * n);
            return classify(axis[i1], axis[i2], axis[i3]);
        }
        case SliceKind::SYMMETRIC:
            return classify(axis[index], axis[index], axis[index]);
        case SliceKind::PAIR:
            return classify(axis[index], Rational(1) / axis[index], Rational(1));
    }
    throw std::logic_error("region: unknown slice kind");
}

}  // namespace

const char* to_string(CellClass c) {
    switch (c) {
        case CellClass::SATISFIED: return "SATISFIED";
        case CellClass::VIOLATED: return "VIOLATED";
        case CellClass::EQUALITY: return "EQUALITY";
    }
    return "?";
}

RegionCell classify(const Rational& x1, const Rational& x2, const Rational& x3) {
    if (x1.sign() <= 0 || x2.sign() <= 0 || x3.sign() <= 0)
        throw std::domain_error("region: coordinates must be positive");
    RegionCell cell;
    cell.free_coords = {x1, x2, x3};
    cell.x4 = Rational(1) / (x1 * x2 * x3);
    cell.value = kernel(x1) + kernel(x2) + kernel(x3) + kernel(cell.x4);
    cell.cls = class_of(cell.value);
    return cell;
}

ScanSummary scan_grid(const ScanConfig& cfg, const std::function<void(const RegionCell&)>& emit) {
    const std::vector<Rational> axis = axis_values(cfg);
    const long total = cell_count(cfg, axis.size());
    if (total > 10'000'000)
        throw std::invalid_argument("region: grid exceeds 10^7 cells; shrink the window or resolution");

    constexpr long kChunk = 2048;
    const long chunks = (total + kChunk - 1) / kChunk;
    const long wave = std::max<long>(1, static_cast<long>(thread_cap()));

    ScanSummary summary;
    std::vector<std::vector<RegionCell>> buffers(static_cast<size_t>(wave));
    for (long wave_start = 0; wave_start < chunks; wave_start += wave) {
        const long wave_len = std::min(wave, chunks - wave_start);
        parallel_for(static_cast<size_t>(wave_len), [&](size_t w) {
            const long chunk = wave_start + static_cast<long>(w);
            const long begin = chunk * kChunk;
            const long end = std::min(total, begin + kChunk);
            auto& buf = buffers[w];
            buf.clear();
            buf.reserve(static_cast<size_t>(end - begin));
            for (long i = begin; i < end; ++i) buf.push_back(cell_at(cfg, axis, i));
        });
        for (long w = 0; w < wave_len; ++w) {
            for (const RegionCell& cell : buffers[static_cast<size_t>(w)]) {
                switch (cell.cls) {
                    case CellClass::SATISFIED: ++summary.satisfied; break;
                    case CellClass::VIOLATED: ++summary.violated; break;
                    case CellClass::EQUALITY: ++summary.equality; break;
                }
                emit(cell);
            }
        }
    }
    return summary;
}

ScanSummary write_region_csv(const ScanConfig& cfg, std::ostream& os) {
    os << "x1,x2,x3,x4,value_num,value_den,class\n";
    return scan_grid(cfg, [&os](const RegionCell& cell) {
        os << cell.free_coords[0].to_string() << ',' << cell.free_coords[1].to_string() << ','
           << cell.free_coords[2].to_string() << ',' << cell.x4.to_string() << ','
           << cell.value.num().get_str() << ',' << cell.value.den().get_str() << ','
           << to_string(cell.cls) << '\n';
    });
}

namespace {

std::array<double, 4> ray_point(const std::array<double, 4>& anchor,
                                const std::array<double, 4>& direction, double s) {
    std::array<double, 4> x;
    for (int k = 0; k < 4; ++k) x[k] = anchor[k] * std::exp(s * direction[k]);
    return x;
}

double ray_value(const std::array<double, 4>& x) {
    double v = 0.0;
    for (int k = 0; k < 4; ++k) v += (x[k] - 1.0) / (x[k] * x[k] - x[k] + 1.0);
    return v;
}

// Exact sign of the kernel sum at the (rational image of the) double point.
int ray_sign(const std::array<double, 4>& x) {
    Rational sum;
    for (int k = 0; k < 4; ++k) sum += kernel(Rational::from_double(x[k]));
    return sum.sign();
}

}  // namespace

RayTrace trace_boundary(const std::array<double, 4>& anchor,
                        const std::array<double, 4>& direction, double s_max) {
    for (double a : anchor)
        if (!(a > 0.0)) throw std::invalid_argument("region: anchor coordinates must be positive");
    double dir_sum = 0.0, dir_norm = 0.0;
    for (double d : direction) {
        dir_sum += d;
        dir_norm += std::abs(d);
    }
    if (dir_norm == 0.0) throw std::invalid_argument("region: direction is zero");
    if (std::abs(dir_sum) > 1e-12 * dir_norm)
        throw std::invalid_argument("region: direction must sum to zero so the product stays 1");
    if (!(s_max > 0.0)) throw std::invalid_argument("region: ray length must be positive");

    RayTrace trace;
    trace.anchor = anchor;
    trace.direction = direction;

    constexpr int kSamples = 64;
    std::vector<std::pair<double, double>> samples;
    samples.reserve(kSamples + 1);
    bool found = false;
    double prev_s = 0.0;
    int prev_sign = 0;
    for (int i = 0; i <= kSamples; ++i) {
        const double s = s_max * static_cast<double>(i) / kSamples;
        const auto x = ray_point(anchor, direction, s);
        samples.emplace_back(s, ray_value(x));
        const int sg = ray_sign(x);
        if (sg != 0) {
            if (prev_sign != 0 && sg != prev_sign) {
                trace.s_lo = prev_s;
                trace.s_hi = s;
                trace.sign_lo = prev_sign;
                trace.sign_hi = sg;
                found = true;
                break;
            }
            prev_s = s;
            prev_sign = sg;
        }
    }
    if (!found) {
        std::ostringstream msg;
        msg << "region: no sign change along the ray; sampled values:";
        for (const auto& [s, v] : samples) msg << ' ' << s << "->" << v;
        throw NoSignChangeError(msg.str(), samples);
    }

    double lo = trace.s_lo, hi = trace.s_hi;
    int sign_lo = trace.sign_lo;
    double best = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        best = mid;
        const auto x = ray_point(anchor, direction, mid);
        if (std::abs(ray_value(x)) <= 1e-10) break;
        const int sg = ray_sign(x);
        if (sg == 0) break;
        if (sg == sign_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-15) break;
    }
    trace.crossing = best;
    trace.point = ray_point(anchor, direction, best);
    trace.residual = std::abs(ray_value(trace.point));
    return trace;
}

}  // namespace ineq
