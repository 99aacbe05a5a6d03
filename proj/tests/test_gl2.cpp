#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "siegel/gl2.hpp"
#include "siegel/mold.hpp"
#include "siegel/specfun.hpp"
#include "siegel/sweep.hpp"

using namespace siegel;
using gl2::UpperHalfPoint;
using specfun::kPi;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("scattering_phi composition, symmetry and sign") {
    CHECK_THAT(gl2::scattering_phi(2.0),
               WithinRel(specfun::zeta_star(3.0) / specfun::zeta_star(4.0), 1e-13));
    for (double s : {0.7, 0.8, 1.3, 2.0, 0.26}) {
        CHECK_THAT(gl2::scattering_phi(s) * gl2::scattering_phi(1.0 - s), WithinRel(1.0, 1e-10));
    }
    const double phi34 = gl2::scattering_phi(0.75);
    CHECK_THAT(phi34, WithinRel(specfun::zeta_star(0.5) / specfun::zeta_star(1.5), 1e-13));
    CHECK(phi34 < 0.0);
    CHECK_THROWS_AS(gl2::scattering_phi(0.5 + 1e-8), pole_error);
    CHECK_THROWS_AS(gl2::scattering_phi(1.0 - 1e-8), pole_error);
    CHECK_THROWS_AS(gl2::scattering_phi(3e-7), pole_error);
}

TEST_CASE("eval_e against the full-lattice oracle at tau = i, s = 2") {
    // sum over |m|,|n| <= 2000 of (y/|mz+n|^2)^s equals 2 zeta(2s) e(tau,s);
    // closed form 4 zeta(2) beta(2) at tau = i, s = 2.
    const double lattice = oracles::lattice_sum(0.0, 1.0, 2.0, 2000);
    const double e = gl2::eval_e(UpperHalfPoint(0.0, 1.0), 2.0).value;
    CHECK_THAT(2.0 * specfun::riemann_zeta(4.0) * e, WithinAbs(lattice, 2e-6));
    CHECK_THAT(e, WithinAbs(2.7842015453307912, 1e-9)); // 2 zeta(2) G / zeta(4)
    const double full = gl2::eval_e_full(UpperHalfPoint(0.0, 1.0), 2.0).value;
    CHECK_THAT(full, WithinAbs(lattice, 2e-6));
}

TEST_CASE("eval_e against the tail-completed coset oracle") {
    CHECK_THAT(gl2::eval_e(UpperHalfPoint(0.0, 2.0), 1.5).value,
               WithinAbs(oracles::coset_sum(0.0, 2.0, 1.5), 1e-7));
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> xs(-0.5, 0.5), ys(0.8, 3.0), ss(1.4, 2.4);
    for (int i = 0; i < 10; ++i) {
        const double x = xs(rng), y = ys(rng), s = ss(rng);
        const double mine = gl2::eval_e(UpperHalfPoint(x, y), s).value;
        const double oracle = oracles::coset_sum(x, y, s);
        REQUIRE_THAT(mine, WithinAbs(oracle, 1e-6));
    }
}

TEST_CASE("eval_e periodicity in x") {
    const double tol = 1e-12;
    for (double s : {0.75, 1.3, 2.0}) {
        const auto a = gl2::eval_e(UpperHalfPoint(0.37, 1.1), s, tol);
        const auto b = gl2::eval_e(UpperHalfPoint(1.37, 1.1), s, tol);
        CHECK_THAT(a.value, WithinAbs(b.value, 2.0 * tol));
        CHECK(a.tail_bound <= tol);
    }
}

TEST_CASE("modular invariance on the fundamental-domain boundary") {
    const double tol = 1e-12;
    // 20 points: 12 on the unit arc, 8 on the vertical edges |x| = 1/2
    std::vector<UpperHalfPoint> pts;
    for (int k = 1; k <= 12; ++k) {
        const double ang = kPi / 3.0 + (kPi / 3.0) * k / 13.0;
        pts.emplace_back(std::cos(ang), std::sin(ang));
    }
    for (int k = 0; k < 8; ++k) pts.emplace_back(k < 4 ? 0.5 : -0.5, 1.05 + 0.35 * (k % 4));
    REQUIRE(pts.size() == 20);
    for (double s : {0.75, 1.3, 2.0}) {
        for (const auto& tau : pts) {
            const double norm = tau.x * tau.x + tau.y * tau.y;
            const UpperHalfPoint inv(-tau.x / norm, tau.y / norm); // -1/tau
            const double a = gl2::eval_e(tau, s, tol).value;
            const double b = gl2::eval_e(inv, s, tol).value;
            REQUIRE_THAT(a, WithinAbs(b, 4.0 * tol));
        }
    }
}

TEST_CASE("completed functional equation in s") {
    const UpperHalfPoint tau(0.3, 1.5);
    for (double s : {0.7, 0.8}) {
        const double lhs = specfun::zeta_star(2.0 * s) * gl2::eval_e(tau, s).value;
        const double rhs = specfun::zeta_star(2.0 - 2.0 * s) * gl2::eval_e(tau, 1.0 - s).value;
        CHECK_THAT(lhs - rhs, WithinAbs(0.0, 1e-8));
    }
}

TEST_CASE("constant term formula") {
    CHECK_THAT(gl2::constant_term_gl2(UpperHalfPoint(0.0, 10.0), 2.0),
               WithinRel(100.0 + gl2::scattering_phi(2.0) * 0.1, 1e-13));
    for (double s : {0.75, 1.4, 2.2}) {
        CHECK_THAT(gl2::constant_term_gl2(UpperHalfPoint(0.77, 1.0), s),
                   WithinRel(1.0 + gl2::scattering_phi(s), 1e-13));
    }
    CHECK_THAT(gl2::constant_term_gl2(UpperHalfPoint(0.0, 4.0), 0.75),
               WithinRel(std::pow(4.0, 0.75) + gl2::scattering_phi(0.75) * std::pow(4.0, 0.25),
                         1e-13));
}

TEST_CASE("gl2_mold coefficients") {
    const auto spec = gl2::gl2_mold(UpperHalfPoint(0.0, 1.0));
    CHECK(spec.a == 1.0);
    CHECK(spec.b == 1.0);
    CHECK(spec.c == -1.0);
    CHECK(spec.d == 0.0);
    CHECK_THAT(spec.C(0.0), WithinRel(3.0 / kPi, 1e-12));
    for (double sg : {-0.3, -0.1, 0.0, 0.2, 0.45}) CHECK(spec.A(sg) == 1.0); // Y = 1
    // predicted zero at y = 100: sigma ~ -3/(100 pi)
    CHECK_THAT(mold::predicted_zero(spec, 100.0), WithinRel(-3.0 / (100.0 * kPi), 1e-12));
    // branch seam of C at |sigma| = 0.2 is smooth
    CHECK_THAT(spec.C(0.2 - 1e-9), WithinRel(spec.C(0.2 + 1e-9), 1e-6));
}

TEST_CASE("mold consistency: eval_mold reproduces e(x + i Y y, 1 + sigma)") {
    const double tol = 1e-12;
    for (const auto& tau : {UpperHalfPoint(0.0, 1.0), UpperHalfPoint(0.3, 1.7)}) {
        const auto spec = gl2::gl2_mold(tau, tol);
        for (double y : {2.0, 10.0}) {
            for (double sg : {-0.1, -0.05, 0.05, 0.1}) {
                const double lhs = mold::eval_mold(spec, y, sg);
                const double rhs =
                    gl2::eval_e(UpperHalfPoint(tau.x, tau.y * y), 1.0 + sg, tol).value;
                REQUIRE_THAT(lhs, WithinAbs(rhs, 2.0 * tol * std::max(1.0, std::fabs(rhs))));
            }
        }
    }
}

TEST_CASE("gl2 sweep ratio approaches 3/(pi y) (Theorem-1 regime)") {
    const auto spec = gl2::gl2_mold(UpperHalfPoint(0.0, 1.0));
    auto r = mold::find_siegel_zero(spec, 200.0, 2.0, 1e-10);
    REQUIRE(r.flags == "ok");
    const double scaled = (-r.beta) * kPi * 200.0 / 3.0;
    CHECK(scaled > 0.93);
    CHECK(scaled < 1.07);
    CHECK_THAT(scaled, WithinAbs(1.049746, 5e-4)); // next order ~ 2 C(0) log y / y
}

TEST_CASE("tail decay probe") {
    const auto probe =
        gl2::tail_decay_probe(UpperHalfPoint(0.0, 1.0), 1.2, {1.0, 5.0, 10.0, 20.0});
    REQUIRE(probe.size() == 4);
    // definitional agreement at y = 1 (subtraction is still clean there)
    const UpperHalfPoint tau1(0.0, 1.0);
    const double sub =
        std::fabs(gl2::eval_e(tau1, 1.2).value - gl2::constant_term_gl2(tau1, 1.2));
    CHECK_THAT(probe[0].second, WithinRel(sub, 1e-9));
    // doubling y = 5 -> 10 beats the generous e^{-2 pi 5} * 10 majorant
    CHECK(probe[2].second / probe[1].second <= std::exp(-2.0 * kPi * 5.0) * 10.0);
    CHECK(probe[3].second <= 1e-50);
    CHECK_THROWS_AS(gl2::tail_decay_probe(tau1, 1.2, {0.5, 2.0}), domain_error);
}

TEST_CASE("eval_e guards") {
    CHECK_THROWS_AS(gl2::eval_e(UpperHalfPoint(0.0, 0.01), 1.5), domain_error);
    CHECK_THROWS_AS(gl2::eval_e(UpperHalfPoint(0.0, 1.0), 2.8), domain_error);
    CHECK_THROWS_AS(gl2::eval_e(UpperHalfPoint(0.0, 1.0), 1.5, -1.0), domain_error);
    CHECK_THROWS_AS(UpperHalfPoint(0.0, -1.0), domain_error);
}
