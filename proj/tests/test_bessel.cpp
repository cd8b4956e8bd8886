#include "doctest.h"
#include "kuzver/special.hpp"
#include "kuzver/bessel_imag.hpp"
#include "kuzver/quadrature.hpp"

using namespace kuzver;
using namespace kuzver::special;

TEST_CASE("J at classical points") {
    CHECK(bessel_j(0.0, 1e-14) == doctest::Approx(1.0));
    // J0 zero near 2.404825557695773
    CHECK(std::abs(bessel_j(0.0, 2.404825557695773)) < 1e-12);
    // J1(1) = 0.4400505857449335
    CHECK(bessel_j(1.0, 1.0) == doctest::Approx(0.4400505857449335).epsilon(1e-12));
    // large argument, order 0: J0(50) = 0.05581232766925181
    CHECK(bessel_j(0.0, 50.0) == doctest::Approx(0.05581232766925181).epsilon(1e-10));
}

TEST_CASE("J ladder agrees with single evaluations and sum rule") {
    for (double x : {0.3, 3.7, 16.0, 45.0}) {
        int nmax = 30 + static_cast<int>(2 * x);
        auto lad = bessel_j_ladder(nmax, x);
        CHECK(lad[0] == doctest::Approx(bessel_j(0.0, x)).epsilon(1e-10));
        CHECK(lad[1] == doctest::Approx(bessel_j(1.0, x)).epsilon(1e-10));
        double norm = lad[0];
        for (int k = 2; k <= nmax; k += 2) norm += 2.0 * lad[k];
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-11));
        // recurrence consistency in the middle of the ladder
        for (int n = 2; n < 12; ++n) {
            double resid = lad[n - 1] + lad[n + 1] - 2.0 * n / x * lad[n];
            CHECK(std::abs(resid) < 1e-12);
        }
    }
}

TEST_CASE("Wronskian J Y") {
    // J_nu(x) Y_nu'(x) - J_nu'(x) Y_nu(x) = 2/(pi x) at nu = 0, x = 3.7
    double x = 3.7, h = 1e-5;
    auto jd = [&](double t) { return (bessel_j(0.0, t + h) - bessel_j(0.0, t - h)) / (2 * h); };
    auto yd = [&](double t) { return (bessel_y0(t + h) - bessel_y0(t - h)) / (2 * h); };
    double w = bessel_j(0.0, x) * yd(x) - jd(x) * bessel_y0(x);
    CHECK(w == doctest::Approx(2.0 / (PI * x)).epsilon(1e-8));
    // exact derivative relations instead of differences: J0' = -J1, Y0' = -Y1
    double w2 = bessel_j(0.0, x) * (-bessel_y1(x)) - (-bessel_j(1.0, x)) * bessel_y0(x);
    CHECK(w2 == doctest::Approx(2.0 / (PI * x)).epsilon(1e-12));
    // non-integer order via the series window
    double nu = 0.3;
    auto jnd = [&](double t) { return (bessel_j(nu, t + h) - bessel_j(nu, t - h)) / (2 * h); };
    auto ynd = [&](double t) { return (bessel_y(nu, t + h) - bessel_y(nu, t - h)) / (2 * h); };
    double w3 = bessel_j(nu, x) * ynd(x) - jnd(x) * bessel_y(nu, x);
    CHECK(w3 == doctest::Approx(2.0 / (PI * x)).epsilon(1e-8));
}

TEST_CASE("I and K values") {
    CHECK(bessel_i0(1.0) == doctest::Approx(1.2660658777520084).epsilon(1e-13));
    CHECK(bessel_i1(1.0) == doctest::Approx(0.5651591039924850).epsilon(1e-13));
    CHECK(bessel_k0(1.0) == doctest::Approx(0.4210244382407084).epsilon(1e-12));
    CHECK(bessel_k1(1.0) == doctest::Approx(0.6019072301972346).epsilon(1e-12));
    // K recurrence: K_2(x) = K_0(x) + 2 K_1(x)/x
    double x = 2.3;
    CHECK(bessel_k(2.0, x) ==
          doctest::Approx(bessel_k0(x) + 2.0 * bessel_k1(x) / x).epsilon(1e-12));
    // Wronskian I K: I0 K1 + I1 K0 = 1/x
    CHECK(bessel_i0(x) * bessel_k1(x) + bessel_i1(x) * bessel_k0(x) ==
          doctest::Approx(1.0 / x).epsilon(1e-12));
}

TEST_CASE("K with purely imaginary order is real and matches its quadrature") {
    // K_{2i}(1.5) vs int_0^inf e^{-1.5 cosh t} cos(2 t) dt
    double x = 1.5, r = 1.0;
    auto f = [&](double t) -> cplx { return std::exp(-x * std::cosh(t)) * std::cos(2.0 * r * t); };
    double oracle = integrate_gl(f, 0.0, 8.0, 1e-15, 1e-300, 16).value.real();
    double val = kki(x, r) / std::cosh(PI * r);
    CHECK(std::abs(val - oracle) < 1e-9);
    // imaginary part of the complex-order integral routine
    cplx direct = bessel_k_complex_order(cplx(0.0, 2.0 * r), x);
    CHECK(std::abs(direct.imag()) < 1e-12);
    CHECK(std::abs(direct.real() - oracle) < 1e-12);
}

TEST_CASE("kki regime boundaries are consistent") {
    // series vs integral representation across the switch line
    for (double r : {0.5, 1.5, 3.0, 5.0, 7.0}) {
        double xs = std::sqrt(112.0 * std::max(r, 1.0));
        for (double x : {0.8 * xs, 0.99 * xs}) {
            double a = kki(x, r);  // dispatches (series below the line)
            double b = kki_integral_probe(x, r);
            CHECK(a == doctest::Approx(b).epsilon(2e-9));
        }
    }
}

TEST_CASE("k0i basics") {
    // r -> 0 limit: k0i(x, 0) = -Y0(x)
    for (double x : {0.4, 2.0, 9.0}) {
        CHECK(k0i(x, 0.0) == doctest::Approx(-bessel_y0(x)).epsilon(1e-12));
        CHECK(k0i(x, 1e-4) == doctest::Approx(-bessel_y0(x)).epsilon(1e-6));
    }
    // even in r
    CHECK(k0i(1.3, 2.2) == doctest::Approx(k0i(1.3, -2.2)).epsilon(1e-14));
}

TEST_CASE("k0i contour and series agree near the crossover") {
    // contour roundoff grows like eps * e^{pi r}: tight through r = 5
    for (double r : {0.7, 1.5, 3.0, 5.0}) {
        double xs = std::sqrt(112.0 * std::max(r, 1.0));
        for (double frac : {0.5, 0.8, 0.99}) {
            double x = frac * xs;
            double a = k0i_series_probe(x, r);
            double b = k0i_contour_probe(x, r);
            CHECK(a == doctest::Approx(b).epsilon(5e-9));
        }
    }
    double a = k0i_series_probe(0.9 * std::sqrt(112.0 * 6.4), 6.4);
    double b = k0i_contour_probe(0.9 * std::sqrt(112.0 * 6.4), 6.4);
    CHECK(a == doctest::Approx(b).epsilon(1e-6));
}

TEST_CASE("k0i ODE continuation consistent with the contour oracle") {
    for (double r : {0.4, 2.0, 4.5}) {
        std::vector<double> xs = {15.0, 40.0, 60.0, 90.0, 130.0, 180.0};
        auto swept = k0i_sweep(r, xs);
        for (size_t i = 0; i < xs.size(); ++i) {
            double ref = k0i_contour_probe(xs[i], r);
            CHECK(swept[i] == doctest::Approx(ref).epsilon(5e-9));
        }
    }
    // larger r: oracle noise dominates, keep a loose band
    double r = 8.0;
    std::vector<double> xs = {35.0, 70.0, 140.0};
    auto swept = k0i_sweep(r, xs);
    for (size_t i = 0; i < xs.size(); ++i) {
        double ref = k0i_contour_probe(xs[i], r);
        CHECK(swept[i] == doctest::Approx(ref).epsilon(3e-5));
    }
}

TEST_CASE("J of imaginary order") {
    cplx J, dJ;
    // u -> 0 reduces to J0 / derivative to -J1
    j_imag_order(1e-9, 7.3, J, dJ);
    CHECK(std::abs(J - bessel_j(0.0, 7.3)) < 3e-9);
    CHECK(std::abs(dJ + bessel_j(1.0, 7.3)) < 3e-9);
    // consistency with the k0i kernel: k0i = -Im J_{2ir}/ sinh(pi r)
    double u = 0.8, x = 3.1;
    j_imag_order(u, x, J, dJ);
    CHECK(-J.imag() / std::sinh(PI * u) == doctest::Approx(k0i(x, u)).epsilon(1e-10));
    // contour vs series route agreement where both are certified
    double x2 = 9.0;
    cplx J2, dJ2;
    j_imag_order_series_probe(u, x2, J2, dJ2);
    cplx J3, dJ3;
    j_imag_order_contour_probe(u, x2, J3, dJ3);
    CHECK(std::abs(J3 - J2) < 2e-9 * std::abs(J2));
    CHECK(std::abs(dJ3 - dJ2) < 2e-9 * std::abs(dJ2));
}

TEST_CASE("bessel dispatcher") {
    CHECK(std::abs(bessel(BesselKind::J, cplx(3.0), 2.0) - bessel_j(3.0, 2.0)) < 1e-14);
    CHECK(std::abs(bessel(BesselKind::K, cplx(0.0, 2.0), 1.5) -
                   kki(1.5, 1.0) / std::cosh(PI)) < 1e-12);
    CHECK_THROWS(bessel(BesselKind::J, cplx(0.5, 0.5), 1.0));  // mixed complex order
}
