#ifndef SIEGEL_GL2_HPP
#define SIEGEL_GL2_HPP

// The classical nonholomorphic Eisenstein series on the upper half plane,
//
//   e(tau, s) = y^s + sum_{c>0, (c,d)=1} y^s / |c tau + d|^{2s},
//
// evaluated through its Fourier expansion
//
//   e(tau, s) = y^s + phi(s) y^{1-s}
//             + (4 / zeta*(2s)) sqrt(y) sum_{n>=1} n^{s-1/2} sigma_{1-2s}(n)
//               K_{s-1/2}(2 pi n y) cos(2 pi n x),
//
// with scattering term phi(s) = zeta*(2s-1)/zeta*(2s).  The identity coset
// y^s is included: the Levi coset decomposition on GL(3) and the residue
// normalization both require it.  The abstract's full-lattice series is the
// trivial rescaling E = 2 zeta(2s) e, exposed separately.

#include <cmath>
#include <utility>
#include <vector>

#include "siegel/errors.hpp"
#include "siegel/mold.hpp"
#include "siegel/specfun.hpp"

namespace siegel::gl2 {

struct UpperHalfPoint {
    double x;
    double y;
    UpperHalfPoint(double x_, double y_) : x(x_), y(y_) {
        if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y))
            throw domain_error("UpperHalfPoint: requires finite x and y > 0");
    }
};

// Value plus a certified bound on the truncation error of the Fourier tail.
struct Gl2Eval {
    double value;
    double tail_bound;
};

// phi(s) = zeta*(2s-1) / zeta*(2s); poles guarded near s in {0, 1/2, 1}.
inline double scattering_phi(double s) {
    using specfun::zeta_star;
    return zeta_star(2.0 * s - 1.0) / zeta_star(2.0 * s);
}

// y^s + phi(s) y^{1-s}, the constant term along the parabolic.
inline double constant_term_gl2(const UpperHalfPoint& tau, double s) {
    return std::pow(tau.y, s) + scattering_phi(s) * std::pow(tau.y, 1.0 - s);
}

namespace detail {

// Non-constant Fourier part with a certified tail bound.  Term majorant:
// sigma_nu(n) <= 2 sqrt(n) n^{max(nu,0)} and, for |nu| <= 2 and x >= 0.3,
// K_nu(x) <= 2.5 e^-x (x^-2 + x^-1/2), giving
//   |term_n| <= 5 |coef| sqrt(y) ((2 pi y)^-2 + (2 pi y)^-1/2) n^q e^{-2 pi n y},
// q = s + max(1-2s, 0) > 0.  The tail is summed geometrically once the
// term ratio falls under 1.
inline std::pair<double, double> fourier_tail(const UpperHalfPoint& tau, double s,
                                              double tol) {
    using namespace specfun;
    if (!(tol > 0.0)) throw domain_error("eval_e: requires tol > 0");
    if (!(tau.y >= 0.05)) throw domain_error("eval_e: requires y >= 0.05");
    if (!(std::fabs(s - 0.5) <= 2.0))
        throw domain_error("eval_e: K-Bessel order |s - 1/2| <= 2 required");
    const double coef = 4.0 / zeta_star(2.0 * s);
    const double two_pi_y = 2.0 * kPi * tau.y;
    const double m0 = 5.0 * std::fabs(coef) * std::sqrt(tau.y) *
                      (1.0 / (two_pi_y * two_pi_y) + 1.0 / std::sqrt(two_pi_y));
    const double decay = std::exp(-two_pi_y);
    const double q = s + std::max(1.0 - 2.0 * s, 0.0);
    auto majorant = [&](int n) {
        if (n * two_pi_y > 705.0) return 0.0;
        return m0 * std::pow(static_cast<double>(n), q) * std::exp(-n * two_pi_y);
    };
    double sum = 0.0;
    for (int n = 1; n <= 1000000; ++n) {
        const double arg = n * two_pi_y;
        if (arg <= 705.0) {
            sum += coef * std::sqrt(tau.y) * std::pow(static_cast<double>(n), s - 0.5) *
                   divisor_sigma(1.0 - 2.0 * s, n) * bessel_k(s - 0.5, arg) *
                   std::cos(2.0 * kPi * n * tau.x);
        }
        const double ratio = std::pow(static_cast<double>(n + 2) / (n + 1), q) * decay;
        if (ratio < 1.0) {
            const double bound = majorant(n + 1) / (1.0 - ratio);
            if (bound <= tol) return {sum, bound};
        }
    }
    throw convergence_error("eval_e: truncation index exceeded 1e6");
}

} // namespace detail

// Full evaluation; tail_bound certifies |value - e(tau, s)| <= tail_bound <= tol.
inline Gl2Eval eval_e(const UpperHalfPoint& tau, double s, double tol = 1e-12) {
    const double ct = constant_term_gl2(tau, s);
    auto [tail, bound] = detail::fourier_tail(tau, s, tol);
    return Gl2Eval{ct + tail, bound};
}

// The abstract's full-lattice normalization E(z,s) = 2 zeta(2s) e(z,s).
inline Gl2Eval eval_e_full(const UpperHalfPoint& tau, double s, double tol = 1e-12) {
    const double scale = 2.0 * specfun::riemann_zeta(2.0 * s);
    const Gl2Eval e = eval_e(tau, s, tol);
    return Gl2Eval{scale * e.value, std::fabs(scale) * e.tail_bound};
}

// sigma * e(tau, 1 + sigma/2), continuous through sigma = 0.  Assembled as
//   sigma_times_zeta_star(sigma)/zeta*(2+sigma) * y^{-sigma/2}
//   + sigma * (y^{1+sigma/2} + Fourier tail),
// so the pole never meets a raw quotient.  Value at 0 is 2 Res_{s=1} e
// = 1/zeta*(2) = 6/pi.
inline double sigma_times_e(const UpperHalfPoint& tau, double sigma, double tol = 1e-12) {
    using namespace specfun;
    const double pole_part = sigma_times_zeta_star(sigma) / zeta_star(2.0 + sigma) *
                             std::pow(tau.y, -0.5 * sigma);
    const double regular = std::pow(tau.y, 1.0 + 0.5 * sigma) +
                           detail::fourier_tail(tau, 1.0 + 0.5 * sigma, tol).first;
    return pole_part + sigma * regular;
}

// Mold adapter for Theorem 1.  tau fixes x and the base height Y; the mold's
// y is the sweep multiplier, so the series is sampled at x + i Y y:
//   e(x + i Y y, 1 + sigma) = A(sigma) y^{sigma+1}
//                           + (1/sigma)(y^{-sigma} C(sigma) + D(y, sigma))
// with A(sigma) = Y^{1+sigma}, C(sigma) = sigma phi(1+sigma) Y^{-sigma}
// (C(0) = 1/(2 zeta*(2)) = 3/pi), and D the sigma-scaled Fourier tail.
inline mold::MoldSpec gl2_mold(const UpperHalfPoint& tau, double tol = 1e-12) {
    using namespace specfun;
    const double x = tau.x, Y = tau.y;
    mold::MoldSpec spec;
    spec.a = 1.0;
    spec.b = 1.0;
    spec.c = -1.0;
    spec.d = 0.0;
    spec.sigma_window = 0.55;
    spec.description = "gl2 e(x+iYy,1+sigma), x=" + std::to_string(x) + ", Y=" + std::to_string(Y);
    spec.A = [Y](double sigma) { return std::pow(Y, 1.0 + sigma); };
    spec.C = [Y](double sigma) {
        double sphi; // sigma * phi(1 + sigma)
        if (std::fabs(sigma) <= 0.2)
            sphi = sigma_times_zeta_star(2.0 * sigma) / (2.0 * zeta_star(2.0 + 2.0 * sigma));
        else
            sphi = sigma * zeta_star(1.0 + 2.0 * sigma) / zeta_star(2.0 + 2.0 * sigma);
        return sphi * std::pow(Y, -sigma);
    };
    spec.B = [](double, double) { return 0.0; };
    spec.D = [x, Y, tol](double y, double sigma) {
        return sigma * detail::fourier_tail(UpperHalfPoint(x, Y * y), 1.0 + sigma, tol).first;
    };
    return spec;
}

// Magnitude of the non-constant part at each height, summed directly from the
// Fourier side (a float subtraction e - constant term would drown in rounding
// once the tail is below ~1e-15 of the constant term).
inline std::vector<std::pair<double, double>> tail_decay_probe(const UpperHalfPoint& tau,
                                                               double s,
                                                               const std::vector<double>& y_grid,
                                                               double tol = 1e-12) {
    std::vector<std::pair<double, double>> out;
    out.reserve(y_grid.size());
    double prev = 0.0;
    bool first = true;
    for (double y : y_grid) {
        if (!(y >= 1.0) || (!first && y <= prev))
            throw domain_error("tail_decay_probe: y_grid must be increasing with min >= 1");
        first = false;
        prev = y;
        const double tail = detail::fourier_tail(UpperHalfPoint(tau.x, y), s, tol).first;
        out.emplace_back(y, std::fabs(tail));
    }
    return out;
}

} // namespace siegel::gl2

#endif
