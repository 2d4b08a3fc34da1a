#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace agc {

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q(x) - (1-x) log_q(1-x),
/// extended by H_q(0) = 0 and H_q(1) = log_q(q-1).
inline double entropy_q(std::uint64_t q, double x) {
    require(q >= 2, errc::domain, "entropy needs q >= 2");
    require(x >= 0.0 && x <= 1.0, errc::domain, "entropy argument must lie in [0,1]");
    const double lq = std::log(static_cast<double>(q));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return std::log(static_cast<double>(q - 1)) / lq;
    return (x * std::log(static_cast<double>(q - 1)) - x * std::log(x) - (1.0 - x) * std::log(1.0 - x)) / lq;
}

/// Gilbert-Varshamov rate 1 - H_q(delta), the random-code achievability
/// curve; defined for delta in [0, 1 - 1/q].
inline double gv_rate(std::uint64_t q, double delta) {
    require(q >= 2, errc::domain, "gv_rate needs q >= 2");
    require(delta >= 0.0 && delta <= 1.0 - 1.0 / static_cast<double>(q), errc::domain,
            "gv_rate needs 0 <= delta <= 1 - 1/q");
    return std::clamp(1.0 - entropy_q(q, delta), 0.0, 1.0);
}

inline double singleton_line(double delta) { return std::max(0.0, 1.0 - delta); }

inline double plotkin_line(std::uint64_t q, double delta) {
    require(q >= 2, errc::domain, "plotkin_line needs q >= 2");
    return std::max(0.0, 1.0 - 1.0 / static_cast<double>(q) - delta);
}

/// True iff q is the square of a prime, the scope of the sqrt(q)-1 bound.
inline bool tvz_applicable(std::uint64_t q) {
    return is_perfect_square(q) && is_prime(isqrt(q));
}

/// R = 1 - 1/(sqrt(q)-1) - delta, clamped at 0. The line is vacuous for
/// q <= 4 (sqrt(q)-1 <= 1); exact integer sqrt is used when q is a square.
inline double tvz_line(std::uint64_t q, double delta) {
    require(q > 4, errc::tvz_undefined, "tvz_line is vacuous for q <= 4 (sqrt(q)-1 <= 1)");
    double root = is_perfect_square(q) ? static_cast<double>(isqrt(q)) : std::sqrt(static_cast<double>(q));
    return std::max(0.0, 1.0 - 1.0 / (root - 1.0) - delta);
}

struct CrossoverResult {
    bool beats = false;
    double delta_lo = 0.0;  // meaningful only when beats
    double delta_hi = 0.0;
    double max_gap = 0.0;  // max over the grid of tvz - gv (signed)
};

/// Scans tvz - gv on a uniform grid in (0, 1 - 1/q) and refines the sign
/// changes by bisection to 1e-9. Requires q a prime square >= 9; the gap
/// function is concave, so the positive set is one interval.
inline CrossoverResult tvz_beats_gv(std::uint64_t q, std::size_t grid_points = 20000) {
    require(tvz_applicable(q) && q >= 9, errc::tvz_undefined,
            "crossover analysis needs q a prime square >= 9");
    const double hi = 1.0 - 1.0 / static_cast<double>(q);
    auto gap = [q](double x) { return tvz_line(q, x) - gv_rate(q, x); };

    CrossoverResult res;
    std::vector<double> xs(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i)
        xs[i] = hi * static_cast<double>(i + 1) / static_cast<double>(grid_points + 1);

    std::size_t first_pos = grid_points, last_pos = 0;
    res.max_gap = gap(xs[0]);
    for (std::size_t i = 0; i < grid_points; ++i) {
        double g = gap(xs[i]);
        if (g > res.max_gap) res.max_gap = g;
        if (g > 0.0) {
            if (first_pos == grid_points) first_pos = i;
            last_pos = i;
        }
    }
    res.beats = res.max_gap > 1e-9;
    if (!res.beats) return res;

    // gap < 0 at both ends of the interval, so each crossing sits between a
    // non-positive and a positive grid point.
    auto bisect = [&](double neg_x, double pos_x) {
        while (std::abs(pos_x - neg_x) > 1e-9) {
            double mid = 0.5 * (neg_x + pos_x);
            if (gap(mid) > 0.0)
                pos_x = mid;
            else
                neg_x = mid;
        }
        return 0.5 * (neg_x + pos_x);
    };
    double before = first_pos > 0 ? xs[first_pos - 1] : hi / static_cast<double>(grid_points + 1) * 0.01;
    double after = last_pos + 1 < grid_points ? xs[last_pos + 1] : hi;
    res.delta_lo = bisect(before, xs[first_pos]);
    res.delta_hi = bisect(after, xs[last_pos]);
    return res;
}

/// One row of the (delta, R) landscape; every value clamped to [0,1], the GV
/// column 0 beyond its 1 - 1/q domain and the TVZ column 0 when undefined.
struct BoundPoint {
    double delta;
    double r_singleton;
    double r_plotkin;
    double r_gv;
    double r_tvz;
};

inline std::vector<BoundPoint> bound_table(std::uint64_t q, std::size_t samples) {
    require(q >= 2, errc::domain, "bound_table needs q >= 2");
    require(samples >= 2, errc::domain, "bound_table needs at least 2 samples");
    const double gv_edge = 1.0 - 1.0 / static_cast<double>(q);
    std::vector<BoundPoint> rows;
    rows.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        double delta = static_cast<double>(i) / static_cast<double>(samples - 1);
        BoundPoint pt{};
        pt.delta = delta;
        pt.r_singleton = singleton_line(delta);
        pt.r_plotkin = plotkin_line(q, delta);
        pt.r_gv = delta <= gv_edge ? gv_rate(q, delta) : 0.0;
        pt.r_tvz = q > 4 ? tvz_line(q, delta) : 0.0;
        rows.push_back(pt);
    }
    return rows;
}

namespace detail {
// Locale-independent float with 12 significant digits.
inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
}  // namespace detail

inline std::string bound_table_csv(const std::vector<BoundPoint>& rows) {
    std::string out = "delta,singleton,plotkin,gv,tvz\n";
    for (const auto& r : rows) {
        out += detail::fmt12(r.delta) + "," + detail::fmt12(r.r_singleton) + "," +
               detail::fmt12(r.r_plotkin) + "," + detail::fmt12(r.r_gv) + "," + detail::fmt12(r.r_tvz) +
               "\n";
    }
    return out;
}

}  // namespace agc
