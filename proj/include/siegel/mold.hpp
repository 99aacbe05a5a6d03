#ifndef SIEGEL_MOLD_HPP
#define SIEGEL_MOLD_HPP

// The normal form every Eisenstein instance is adapted into:
//
//   F(y, sigma) = A(sigma) y^{a sigma + b} + B(y, sigma)
//               + (1/sigma) ( y^{c sigma + d} C(sigma) + D(y, sigma) ),
//
// with b > d, A and C continuous and nonvanishing near 0, and B, D decaying
// relative to their leading powers.  Any such F has a real zero beta just
// beside the sigma = 0 pole once y is large, with
//
//   -beta(y) ~ C(0) / (A(0) y^{b-d}).
//
// Two degenerate regimes are supported: b < d (no zero appears near 0) and
// C(0) = 0 (the zero survives on the D term but the asymptotic no longer
// applies).

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/zerofind.hpp"

namespace siegel::mold {

enum class MoldRegime {
    Standard, // b > d, C(0) != 0
    Remark1,  // b < d: F expected nonvanishing near 0
    Remark2,  // b > d but C(0) = 0: zero exists, asymptotic degenerate
};

struct MoldSpec {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    std::function<double(double)> A, C;                 // sigma -> value
    std::function<double(double, double)> B, D;         // (y, sigma) -> value
    double sigma_window = 0.5;  // half-width where A, C are certified
    MoldRegime regime = MoldRegime::Standard;
    std::string description;

    void validate() const {
        if (!A || !C) throw precondition_error("MoldSpec: A and C evaluators required");
        if (!(sigma_window > 0.0)) throw precondition_error("MoldSpec: sigma_window must be > 0");
        if (regime == MoldRegime::Remark1) {
            if (!(b < d)) throw precondition_error("MoldSpec: Remark-1 flag requires b < d");
        } else if (!(b > d)) {
            throw precondition_error("MoldSpec: requires b > d unless flagged Remark-1");
        }
        if (A(0.0) == 0.0) throw precondition_error("MoldSpec: A(0) must not vanish");
        if (regime == MoldRegime::Standard && C(0.0) == 0.0)
            throw precondition_error("MoldSpec: C(0) = 0 only in the Remark-2 regime");
    }
};

// One sweep row: location of the zero beside the pole at height y, the
// asymptotic prediction, and search diagnostics.
struct SiegelZeroReport {
    double y = 0.0;
    double epsilon = 0.0;
    double bracket_lo = std::numeric_limits<double>::quiet_NaN();
    double bracket_hi = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    double predicted = std::numeric_limits<double>::quiet_NaN();
    double ratio = std::numeric_limits<double>::quiet_NaN(); // |beta| / |predicted|
    bool sign_agrees = false;
    int iterations = 0;
    double residual = std::numeric_limits<double>::quiet_NaN(); // |F(y, beta)|
    std::string flags = "ok";

    bool bracketed() const { return flags == "ok" || flags == "degenerate-c0"; }
};

inline double eval_mold(const MoldSpec& spec, double y, double sigma) {
    if (!(y > 1.0)) throw domain_error("eval_mold: requires y > 1");
    if (sigma == 0.0) throw pole_error("eval_mold: pole at sigma = 0", sigma);
    if (!(std::fabs(sigma) <= spec.sigma_window))
        throw domain_error("eval_mold: sigma outside certified window");
    const double lead = spec.A(sigma) * std::pow(y, spec.a * sigma + spec.b) +
                        (spec.B ? spec.B(y, sigma) : 0.0);
    const double sing = std::pow(y, spec.c * sigma + spec.d) * spec.C(sigma) +
                        (spec.D ? spec.D(y, sigma) : 0.0);
    return lead + sing / sigma;
}

// -C(0) / (A(0) y^{b-d}); 0 when C(0) = 0 (Remark-2, no asymptotic).
inline double predicted_zero(const MoldSpec& spec, double y) {
    const double a0 = spec.A(0.0);
    if (a0 == 0.0) throw precondition_error("predicted_zero: A(0) = 0");
    const double c0 = spec.C(0.0);
    if (c0 == 0.0) return 0.0;
    return -c0 / (a0 * std::pow(y, spec.b - spec.d));
}

// Locate a zero of F(y, .) inside (-eps/log y, eps/log y).  Both sides of 0
// are sampled geometrically inward; when both carry a sign change the side
// matching the lemma's orientation wins (A(0), C(0) > 0 puts the zero on
// (-l, 0), and each sign flip of A or C mirrors it).  Failure to bracket is
// reported, not thrown: it is the expected Remark-1 outcome.
inline SiegelZeroReport find_siegel_zero(const MoldSpec& spec, double y, double epsilon,
                                         double tol = 1e-10) {
    spec.validate();
    if (!(y > 1.0)) throw domain_error("find_siegel_zero: requires y > 1");
    if (!(tol > 0.0)) throw domain_error("find_siegel_zero: requires tol > 0");

    SiegelZeroReport rep;
    rep.y = y;
    rep.epsilon = epsilon;

    const double c0 = spec.C(0.0);
    rep.predicted = predicted_zero(spec, y);

    const double window = epsilon / std::log(y);
    if (!(window < spec.sigma_window)) {
        rep.flags = "window-too-wide";
        return rep;
    }

    auto f = [&spec, y](double s) { return eval_mold(spec, y, s); };
    auto neg = zerofind::detail::scan_side(f, -window, 40);
    auto pos = zerofind::detail::scan_side(f, window, 40);
    const bool prefer_negative = spec.A(0.0) * c0 >= 0.0;
    std::optional<zerofind::Bracket> br;
    if (neg && pos) br = prefer_negative ? neg : pos;
    else br = neg ? neg : pos;
    if (!br) {
        rep.flags = "no-bracket";
        return rep;
    }
    if (c0 == 0.0) rep.flags = "degenerate-c0";

    const auto res = zerofind::bisect(f, *br, tol, 60);
    rep.beta = res.root;
    rep.residual = res.residual;
    rep.iterations = res.iterations;
    rep.bracket_lo = res.lo;
    rep.bracket_hi = res.hi;
    if (rep.predicted != 0.0) {
        rep.ratio = std::fabs(rep.beta) / std::fabs(rep.predicted);
        rep.sign_agrees = rep.beta * rep.predicted > 0.0;
    }
    return rep;
}

// One report per grid height; per-row failures land in the row flags.
inline std::vector<SiegelZeroReport> asymptotic_ratio_sweep(const MoldSpec& spec,
                                                            const std::vector<double>& y_grid,
                                                            double epsilon, double tol);

// Remark-1 check: dense scan (10^4 points per side) of the epsilon window
// finds no sign change on either side of 0.
inline bool verify_nonvanishing(const MoldSpec& spec, double y, double epsilon) {
    if (spec.regime != MoldRegime::Remark1 || !(spec.b < spec.d))
        throw precondition_error("verify_nonvanishing: spec must be flagged Remark-1 with b < d");
    const double window = std::min(epsilon / std::log(y), spec.sigma_window * (1.0 - 1e-12));
    const int n = 10000;
    for (double side : {-1.0, 1.0}) {
        bool have_prev = false;
        double prev = 0.0;
        for (int i = 1; i <= n; ++i) {
            const double s = side * window * static_cast<double>(i) / (n + 1);
            double v;
            try {
                v = eval_mold(spec, y, s);
            } catch (const domain_error&) {
                continue;
            }
            if (have_prev && prev * v <= 0.0) return false;
            have_prev = true;
            prev = v;
        }
    }
    return true;
}

} // namespace siegel::mold

#endif
