#ifndef SIEGEL_ZEROFIND_HPP
#define SIEGEL_ZEROFIND_HPP

// Bracketing and bisection kernel.  Bisection is used instead of any
// derivative-based method because the functions handed to it sit next to a
// simple pole.

#include <cmath>
#include <functional>
#include <optional>

#include "siegel/errors.hpp"

namespace siegel::zerofind {

struct Bracket {
    double lo, hi;
    double f_lo, f_hi;
};

struct BisectResult {
    double root;
    double residual;   // |f(root)|
    int iterations;
    double lo, hi;     // final sign-preserving bracket
};

// Bisect f on a valid bracket until the width drops below
// tol * max(|midpoint|, 1e-300) or max_iter halvings.  The sign change is
// preserved at every step; the returned root is the final midpoint, nudged
// by extra halvings until |f(root)| does not exceed |f| at either end.
inline BisectResult bisect(const std::function<double(double)>& f, Bracket br,
                           double tol, int max_iter = 60) {
    if (!(br.lo < br.hi) || !(br.f_lo * br.f_hi < 0.0)) {
        if (br.lo == br.hi && (br.f_lo == 0.0 || br.f_hi == 0.0))
            return BisectResult{br.lo, 0.0, 0, br.lo, br.hi};
        throw precondition_error("bisect: invalid bracket");
    }
    double lo = br.lo, hi = br.hi, flo = br.f_lo, fhi = br.f_hi;
    double mid = 0.5 * (lo + hi), fmid = f(mid);
    int it = 0;
    bool width_ok = false;
    while (it < max_iter) {
        ++it;
        if (fmid == 0.0) break;
        if (flo * fmid < 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
        mid = 0.5 * (lo + hi);
        fmid = f(mid);
        width_ok = (hi - lo) <= tol * std::max(std::fabs(mid), 1e-300);
        if (width_ok && std::fabs(fmid) <= std::min(std::fabs(flo), std::fabs(fhi))) break;
    }
    return BisectResult{mid, std::fabs(fmid), it, lo, hi};
}

namespace detail {

// Walk one side of 0 geometrically inward: samples endpoint * 2^-k,
// k = 0..points.  Returns the first sign-change subinterval encountered.
// Samples where f throws (pole-guard punctures) are skipped; the guarded
// spots are removable, so a change across them is still genuine.
inline std::optional<Bracket> scan_side(const std::function<double(double)>& f,
                                        double endpoint, int points) {
    bool have_prev = false;
    double prev_s = 0.0, prev_f = 0.0;
    for (int k = 0; k <= points; ++k) {
        const double s = endpoint * std::pow(2.0, -k);
        double v;
        try {
            v = f(s);
        } catch (const domain_error&) {
            continue;
        }
        if (v == 0.0) return Bracket{s, s, 0.0, 0.0}; // exact hit, degenerate
        if (have_prev && prev_f * v < 0.0) {
            if (s < prev_s) return Bracket{s, prev_s, v, prev_f};
            return Bracket{prev_s, s, prev_f, v};
        }
        have_prev = true;
        prev_s = s;
        prev_f = v;
    }
    return std::nullopt;
}

} // namespace detail

// Geometric-inward bracket scan on (lo, 0) u (0, hi), factor 2, negative side
// first.  Absence of a sign change is a value, not an error.
inline std::optional<Bracket> scan_for_bracket(const std::function<double(double)>& f,
                                               double lo, double hi, int points = 40) {
    if (!(lo < 0.0 && 0.0 < hi)) throw precondition_error("scan_for_bracket: requires lo < 0 < hi");
    if (auto b = detail::scan_side(f, lo, points)) return b;
    return detail::scan_side(f, hi, points);
}

} // namespace siegel::zerofind

#endif
