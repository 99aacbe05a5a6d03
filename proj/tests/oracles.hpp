#ifndef SIEGEL_TESTS_ORACLES_HPP
#define SIEGEL_TESTS_ORACLES_HPP

// Independent oracles used only by the tests.  Each one reaches its value by
// a route disjoint from the library path it checks: raw Dirichlet series,
// lattice / coset sums, and the I-Bessel series for K.

#include <cmath>
#include <cstdint>
#include <numeric>

namespace oracles {

inline constexpr double kPi = 3.14159265358979323846;

// zeta(s) by direct summation to N = 10^6 plus integral and midpoint tail
// corrections; good to ~1e-13 for s >= 2 and usable down to s ~ 1.5.
inline double zeta_series(double s) {
    const int N = 1000000;
    double sum = 0.0;
    for (int n = N; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    const double Nd = N;
    return sum + std::pow(Nd, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(Nd, -s) +
           (s / 12.0) * std::pow(Nd, -s - 1.0);
}

// Full-lattice sum  sum_{0 < max(|m|,|n|)} y^s / |m z + n|^{2s}  truncated to
// the square |m|, |n| <= M.  For z = i, s = 2 this is 4 zeta(2) beta(2).
inline double lattice_sum(double x, double y, double s, int M) {
    // y^s / |m z + n|^{2s} = (y / |m z + n|^2)^s
    double sum = 0.0;
    for (int m = -M; m <= M; ++m) {
        for (int n = -M; n <= M; ++n) {
            if (m == 0 && n == 0) continue;
            const double re = m * x + n;
            const double im = m * y;
            const double q = y / (re * re + im * im);
            sum += (s == 2.0) ? q * q : std::pow(q, s);
        }
    }
    return sum;
}

// Coset-sum oracle for e(tau, s) = y^s + sum_{c>0,(c,d)=1} y^s/|c tau + d|^{2s}.
// Sums c <= C with the d-range [-D, D] completed by the integral of the
// continuum density (phi(c)/c per unit length), and completes the c-tail with
// the exact Dirichlet series sum_c phi(c) c^{-2s} = zeta(2s-1)/zeta(2s):
//   sum_{c>C} (full d-line) = y^{1-s} B(s) [zeta(2s-1)/zeta(2s)
//                                           - sum_{c<=C} phi(c) c^{-2s}],
// with B(s) = sqrt(pi) Gamma(s-1/2)/Gamma(s) = int (1+u^2)^{-s} du.  The
// residual error is the deviation of each d-line from its continuum limit,
// exponentially small in c y.  Valid for s > 1 (tail series must converge).
inline double coset_sum(double x, double y, double s, int C = 500, int D = 30000) {
    double total = std::pow(y, s); // identity coset
    double phi_partial = 0.0;      // sum_{c<=C} phi(c) c^{-2s}
    const double B = std::sqrt(kPi) * std::exp(std::lgamma(s - 0.5) - std::lgamma(s));
    for (int c = 1; c <= C; ++c) {
        // Euler phi by trial factorization
        int phi = c, m = c;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                phi -= phi / p;
                while (m % p == 0) m /= p;
            }
        }
        if (m > 1) phi -= phi / m;
        double line = 0.0;
        for (int d = -D; d <= D; ++d) {
            if (std::gcd(static_cast<unsigned>(c), static_cast<unsigned>(std::abs(d))) != 1)
                continue;
            const double re = c * x + d;
            const double im = c * y;
            line += std::pow(y / (re * re + im * im), s);
        }
        // continuum completion of the two d-tails beyond +-D:
        //   (phi(c)/c) * 2 * int_D^inf y^s ((u + cx)^2 ... ) du, recentred; the
        //   offset cx is absorbed by shifting the cut, error O(c/D^{2s+1}).
        const double a = c * y;
        auto half_tail = [&](double from) {
            // int_from^inf y^s (u^2 + a^2)^{-s} du by substitution u = a tan t
            // = y^s a^{1-2s} int_{atan(from/a)}^{pi/2} cos^{2s-2} t dt; use
            // numeric Simpson on t (smooth, short interval).
            const double t0 = std::atan(from / a);
            const int K = 200;
            const double h = (0.5 * kPi - t0) / K;
            double acc = 0.0;
            for (int k = 0; k <= K; ++k) {
                const double t = t0 + k * h;
                const double w = (k == 0 || k == K) ? 1.0 : (k % 2 ? 4.0 : 2.0);
                acc += w * std::pow(std::cos(t), 2.0 * s - 2.0);
            }
            return std::pow(y, s) * std::pow(a, 1.0 - 2.0 * s) * acc * h / 3.0;
        };
        line += (static_cast<double>(phi) / c) * (half_tail(D + 0.5 - c * x) + half_tail(D + 0.5 + c * x));
        total += line;
        phi_partial += phi * std::pow(static_cast<double>(c), -2.0 * s);
    }
    const double dirichlet = zeta_series(2.0 * s - 1.0) / zeta_series(2.0 * s);
    total += std::pow(y, 1.0 - s) * B * (dirichlet - phi_partial);
    return total;
}

// K_nu(x) through the ascending I-series, K = pi/2 (I_{-nu} - I_nu)/sin(nu pi);
// accurate for moderate x and non-integer nu (loses ~x digits to cancellation).
inline double bessel_k_series(double nu, double x) {
    auto bessel_i = [&](double v) {
        double sum = 0.0;
        for (int k = 0; k < 60; ++k) {
            sum += std::exp((2.0 * k + v) * std::log(0.5 * x) - std::lgamma(k + 1.0) -
                            std::lgamma(k + v + 1.0));
        }
        return sum;
    };
    return 0.5 * kPi * (bessel_i(-nu) - bessel_i(nu)) / std::sin(nu * kPi);
}

} // namespace oracles

#endif
