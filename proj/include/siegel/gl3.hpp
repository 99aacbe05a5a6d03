#ifndef SIEGEL_GL3_HPP
#define SIEGEL_GL3_HPP

// The fully explicit GL(3) instance: minimal parabolic, trivial inducing
// data, spectral parameter lambda = (l1, l2, l3) with l1 + l2 + l3 = 0 acting
// through
//
//   I_lambda[diag(t1,t2,t3)] = |t1|^{l1+1} |t2|^{l2} |t3|^{l3-1}.
//
// The constant term along P_alpha is a sum over the three Weyl cosets
// {I, s_alpha, long}, each contributing
//
//   (y2 sqrt(y1))^{(w lambda)_1 + 1} * (intertwining ratio) * e(tau1, s_w),
//
// with tau1 = x1 + i y1 and the intertwining ratios products of
// zeta*(l_i - l_j) / zeta*(l_i - l_j + 1).  The pole hyperplane studied is
// H : l2 - l3 = 1, traversed by Lambda(sigma) = (1+sigma) l^0 - sigma l^1, so
// that zeta*(Lambda_2 - Lambda_3) = zeta*(1 + sigma) carries the pole.

#include <cmath>
#include <string>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/gl2.hpp"
#include "siegel/mold.hpp"
#include "siegel/specfun.hpp"

namespace siegel::gl3 {

struct SpectralParam {
    double l1, l2, l3;
    SpectralParam(double a, double b, double c) : l1(a), l2(b), l3(c) {
        if (!(std::fabs(l1 + l2 + l3) <= 1e-12))
            throw domain_error("SpectralParam: requires l1 + l2 + l3 = 0");
    }
};

// Iwasawa data (x1,x2,x3,y1,y2) of a point modulo compact and center; only
// tau1 = x1 + i y1 and the grading height y2 sqrt(y1) enter the constant term.
struct Gl3Point {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
    double y1 = 1.0, y2 = 1.0;
    Gl3Point(double x1_, double x2_, double x3_, double y1_, double y2_)
        : x1(x1_), x2(x2_), x3(x3_), y1(y1_), y2(y2_) {
        if (!(y1 > 0.0) || !(y2 > 0.0)) throw domain_error("Gl3Point: requires y1, y2 > 0");
    }
    gl2::UpperHalfPoint tau1() const { return gl2::UpperHalfPoint(x1, y1); }
    double height() const { return y2 * std::sqrt(y1); }
};

enum class WeylElt { Identity, SAlpha, Long };

inline const char* weyl_name(WeylElt w) {
    switch (w) {
        case WeylElt::Identity: return "IDENTITY";
        case WeylElt::SAlpha: return "S_ALPHA";
        default: return "LONG";
    }
}

inline SpectralParam apply(WeylElt w, const SpectralParam& l) {
    switch (w) {
        case WeylElt::Identity: return l;
        case WeylElt::SAlpha: return SpectralParam(l.l2, l.l1, l.l3);
        default: return SpectralParam(l.l3, l.l1, l.l2);
    }
}

// Affine path Lambda(sigma) = (1+sigma) lam0 - sigma lam1 with lam0 on H
// (l2 - l3 = 1) and lam1 on l2 - l3 = 0, so Lambda_2 - Lambda_3 = 1 + sigma.
struct LambdaPath {
    SpectralParam lam0, lam1;
    LambdaPath(SpectralParam l0, SpectralParam l1) : lam0(l0), lam1(l1) {
        if (!(std::fabs(lam0.l2 - lam0.l3 - 1.0) <= 1e-12))
            throw domain_error("LambdaPath: lam0 must satisfy l2 - l3 = 1");
        if (!(std::fabs(lam1.l2 - lam1.l3) <= 1e-12))
            throw domain_error("LambdaPath: lam1 must satisfy l2 - l3 = 0");
    }
};

inline SpectralParam lambda_at(const LambdaPath& path, double sigma) {
    return SpectralParam((1.0 + sigma) * path.lam0.l1 - sigma * path.lam1.l1,
                         (1.0 + sigma) * path.lam0.l2 - sigma * path.lam1.l2,
                         (1.0 + sigma) * path.lam0.l3 - sigma * path.lam1.l3);
}

// Scalar by which the standard intertwining operator acts on the unramified
// vector: one zeta*-quotient per root crossed.
inline double intertwining_ratio(WeylElt w, const SpectralParam& l) {
    using specfun::zeta_star;
    switch (w) {
        case WeylElt::Identity:
            return 1.0;
        case WeylElt::SAlpha:
            return zeta_star(l.l1 - l.l2) / zeta_star(l.l1 - l.l2 + 1.0);
        default:
            return zeta_star(l.l2 - l.l3) / zeta_star(l.l2 - l.l3 + 1.0) *
                   (zeta_star(l.l1 - l.l3) / zeta_star(l.l1 - l.l3 + 1.0));
    }
}

// Value of the Levi Eisenstein series at g:
//   (y2 sqrt(y1))^{l1+1} e(tau1, (l2 - l3 + 1)/2).
inline double levi_eisenstein(const Gl3Point& g, const SpectralParam& l, double tol = 1e-12) {
    return std::pow(g.height(), l.l1 + 1.0) *
           gl2::eval_e(g.tau1(), 0.5 * (l.l2 - l.l3 + 1.0), tol).value;
}

namespace detail {

// e-series argument carried by the w-term: ((w l)_2 - (w l)_3 + 1) / 2.
inline double e_argument(WeylElt w, const SpectralParam& l) {
    const SpectralParam wl = apply(w, l);
    return 0.5 * (wl.l2 - wl.l3 + 1.0);
}

inline double term(WeylElt w, const Gl3Point& g, const SpectralParam& l, double tol) {
    const SpectralParam wl = apply(w, l);
    return std::pow(g.height(), wl.l1 + 1.0) * intertwining_ratio(w, l) *
           gl2::eval_e(g.tau1(), e_argument(w, l), tol).value;
}

} // namespace detail

// Three-term constant term along P_alpha.  Pole errors identify the singular
// term through the offending zeta* argument.
inline double constant_term_gl3(const Gl3Point& g, const SpectralParam& l, double tol = 1e-12) {
    return detail::term(WeylElt::Identity, g, l, tol) +
           detail::term(WeylElt::SAlpha, g, l, tol) +
           detail::term(WeylElt::Long, g, l, tol);
}

enum class Regime { Omega1, Omega2, Boundary };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Omega1: return "omega1";
        case Regime::Omega2: return "omega2";
        default: return "boundary";
    }
}

// Region of lam0 on H:
//   Omega1: l2 > l1 > l3;  Omega2: l1 < l3, l3 != l1 + 1;
// anything within 1e-9 of a defining boundary (or outside both) is Boundary.
inline Regime classify_regime(const SpectralParam& l) {
    if (!(std::fabs(l.l2 - l.l3 - 1.0) <= 1e-9))
        throw precondition_error("classify_regime: lam0 must lie on H (l2 - l3 = 1)");
    const double tol = 1e-9;
    const bool near_12 = std::fabs(l.l1 - l.l2) <= tol;
    const bool near_13 = std::fabs(l.l1 - l.l3) <= tol;
    const bool near_shift = std::fabs(l.l3 - l.l1 - 1.0) <= tol;
    if (near_12 || near_13 || near_shift) return Regime::Boundary;
    if (l.l2 > l.l1 && l.l1 > l.l3) return Regime::Omega1;
    if (l.l1 < l.l3) return Regime::Omega2;
    return Regime::Boundary;
}

struct WmaxRow {
    double lambda1;
    WeylElt argmax;
    int matches; // 1 match, 0 mismatch, -1 excluded (boundary)
};

// Grid scan over H_R: lambda1 in [-2, 2], lam = (l1, (1-l1)/2, (-1-l1)/2).
// Brute-force argmax of the three exponents (w lam)_1 against the paper's
// w_max = s_alpha <=> lam in Omega1 u Omega2 characterization.
inline std::vector<WmaxRow> wmax_region_scan(int resolution) {
    if (resolution < 10) throw domain_error("wmax_region_scan: resolution >= 10 required");
    std::vector<WmaxRow> rows;
    rows.reserve(resolution);
    const double btol = 1e-9;
    for (int i = 0; i < resolution; ++i) {
        const double l1 = -2.0 + 4.0 * i / (resolution - 1);
        const double l2 = 0.5 * (1.0 - l1);
        const double l3 = l2 - 1.0;
        WmaxRow row{l1, WeylElt::Identity, -1};
        const double exps[3] = {l1, l2, l3}; // Identity, SAlpha, Long
        int arg = 0;
        for (int j = 1; j < 3; ++j)
            if (exps[j] > exps[arg]) arg = j;
        row.argmax = static_cast<WeylElt>(arg);
        const bool tie = std::fabs(l1 - l2) <= btol || std::fabs(l1 - l3) <= btol;
        const bool omega2_edge = std::fabs(l3 - l1 - 1.0) <= btol;
        if (tie || omega2_edge) {
            row.matches = -1; // non-generic or Omega2-excluded boundary
        } else {
            const bool in_omega = (l2 > l1 && l1 > l3) || (l1 < l3);
            row.matches = ((row.argmax == WeylElt::SAlpha) == in_omega) ? 1 : 0;
        }
        rows.push_back(row);
    }
    return rows;
}

// Mold adapter on the hyperplane H.  w_max = s_alpha in both regimes; the
// identity and long terms are singular (zeta*(1+sigma) resp. the e-pole at
// 1 + sigma/2), and w_ms is whichever of them carries the larger exponent:
// identity in Omega1, long in Omega2.  A(sigma) is the s_alpha term at sweep
// y = 1; C(sigma) = sigma * (w_ms term at y = 1) assembled pole-stably; the
// remaining singular term goes to D with its sigma multiplier; B = 0.
inline mold::MoldSpec gl3_mold(const Gl3Point& g, const LambdaPath& path, double tol = 1e-12) {
    using specfun::sigma_times_zeta_star;
    using specfun::zeta_star;

    const Regime regime = classify_regime(path.lam0);
    if (regime == Regime::Boundary)
        throw precondition_error("gl3_mold: lam0 is non-generic (boundary of Omega1/Omega2)");
    const gl2::UpperHalfPoint tau1 = g.tau1();
    const double e_at_base =
        gl2::eval_e(tau1, 0.5 * (path.lam0.l1 - path.lam0.l3 + 1.0), tol).value;
    if (!(std::fabs(e_at_base) > 1e-8))
        throw precondition_error("gl3_mold: genericity failure, e(tau1,(l1^0-l3^0+1)/2) ~ 0");

    const double Y = g.height();
    mold::MoldSpec spec;
    spec.sigma_window = 0.49; // sigma_times_zeta_star certifies |sigma| <= 0.5
    spec.description = std::string("gl3 ") + regime_name(regime) + " lam0=(" +
                       std::to_string(path.lam0.l1) + "," + std::to_string(path.lam0.l2) + "," +
                       std::to_string(path.lam0.l3) + ") y1=" + std::to_string(g.y1) +
                       " y2=" + std::to_string(g.y2);

    // Exponent (w Lambda(sigma))_1 + 1 is affine in sigma: slope from
    // lam0 - lam1, intercept from lam0.
    spec.a = path.lam0.l2 - path.lam1.l2;
    spec.b = path.lam0.l2 + 1.0;
    const WeylElt wms = (regime == Regime::Omega1) ? WeylElt::Identity : WeylElt::Long;
    if (wms == WeylElt::Identity) {
        spec.c = path.lam0.l1 - path.lam1.l1;
        spec.d = path.lam0.l1 + 1.0;
    } else {
        spec.c = path.lam0.l3 - path.lam1.l3;
        spec.d = path.lam0.l3 + 1.0;
    }

    spec.A = [g, path, tol, Y](double sigma) {
        const SpectralParam L = lambda_at(path, sigma);
        return std::pow(Y, L.l2 + 1.0) * intertwining_ratio(WeylElt::SAlpha, L) *
               gl2::eval_e(g.tau1(), 0.5 * (L.l1 - L.l3 + 1.0), tol).value;
    };

    // sigma * (identity term / y-grading): pole of e(tau1, 1 + sigma/2).
    auto identity_part = [g, path, tol](double height, double sigma) {
        const SpectralParam L = lambda_at(path, sigma);
        return std::pow(height, L.l1 + 1.0) * gl2::sigma_times_e(g.tau1(), sigma, tol);
    };
    // sigma * (long term / y-grading): pole of zeta*(Lambda_2 - Lambda_3) = zeta*(1+sigma).
    auto long_part = [g, path, tol](double height, double sigma) {
        const SpectralParam L = lambda_at(path, sigma);
        return std::pow(height, L.l3 + 1.0) * sigma_times_zeta_star(sigma) /
               zeta_star(2.0 + sigma) *
               (zeta_star(L.l1 - L.l3) / zeta_star(L.l1 - L.l3 + 1.0)) *
               gl2::eval_e(g.tau1(), 0.5 * (L.l1 - L.l2 + 1.0), tol).value;
    };

    if (regime == Regime::Omega1) {
        spec.C = [identity_part, Y](double sigma) { return identity_part(Y, sigma); };
        spec.D = [long_part, Y](double y, double sigma) { return long_part(Y * y, sigma); };
    } else {
        spec.C = [long_part, Y](double sigma) { return long_part(Y, sigma); };
        spec.D = [identity_part, Y](double y, double sigma) { return identity_part(Y * y, sigma); };
    }
    spec.B = [](double, double) { return 0.0; };
    return spec;
}

// The paper's closed-form asymptotic for beta, with (y2 sqrt(y1)) replaced by
// the effective height of the sweep.  Omega1:
//   6 zeta*(l1-l2+1) / (pi zeta*(l1-l2) e(tau1,(l1-l3+1)/2) Y^{l2-l1});
// Omega2 carries the extra zeta*(l1-l3)/zeta*(l1-l3+1) and e-quotient and a
// single power of Y.
inline double predicted_beta(Regime regime, const SpectralParam& lam0,
                             const gl2::UpperHalfPoint& tau1, double y_effective,
                             double tol = 1e-12) {
    using specfun::kPi;
    using specfun::zeta_star;
    const double l1 = lam0.l1, l2 = lam0.l2, l3 = lam0.l3;
    const double e13 = gl2::eval_e(tau1, 0.5 * (l1 - l3 + 1.0), tol).value;
    if (e13 == 0.0) throw domain_error("predicted_beta: e(tau1,(l1-l3+1)/2) vanishes");
    if (regime == Regime::Omega1) {
        return 6.0 * zeta_star(l1 - l2 + 1.0) /
               (kPi * zeta_star(l1 - l2) * e13 * std::pow(y_effective, l2 - l1));
    }
    if (regime == Regime::Omega2) {
        const double e12 = gl2::eval_e(tau1, 0.5 * (l1 - l2 + 1.0), tol).value;
        return 6.0 * zeta_star(l1 - l2 + 1.0) * zeta_star(l1 - l3) * e12 /
               (kPi * zeta_star(l1 - l2) * zeta_star(l1 - l3 + 1.0) * e13 * y_effective);
    }
    throw precondition_error("predicted_beta: regime must be Omega1 or Omega2");
}

} // namespace siegel::gl3

#endif
