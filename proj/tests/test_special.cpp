#include "doctest.h"
#include "kuzver/special.hpp"

using namespace kuzver;
using namespace kuzver::special;

TEST_CASE("gamma basics") {
    CHECK(std::abs(cgamma(cplx(1.0)) - 1.0) < 1e-14);
    CHECK(std::abs(cgamma(cplx(0.5)) - SQRT_PI) < 1e-14);
    CHECK(std::abs(cgamma(cplx(5.0)) - 24.0) < 1e-12);
    CHECK_THROWS_AS(cgamma(cplx(-3.0)), std::domain_error);
}

TEST_CASE("gamma reflection identity on a grid") {
    // Gamma(z) Gamma(1-z) sin(pi z) / pi = 1
    for (double re : {-3.3, -0.7, 0.2, 0.5001, 1.7, 4.2}) {
        for (double im : {0.0, 0.3, 2.0, 5.0, 11.0}) {
            cplx z(re, im);
            cplx lhs = cgamma(z) * cgamma(1.0 - z) * std::sin(PI * z) / PI;
            CHECK(std::abs(lhs - 1.0) < 1e-11);
        }
    }
    // via lgamma for |z| up to 200
    for (double im : {30.0, 80.0, 150.0}) {
        cplx z(0.5, im);
        cplx lhs = std::exp(lgamma(z) + lgamma(1.0 - z));
        cplx rhs = PI / std::sin(PI * z);
        CHECK(std::abs(lhs / rhs - 1.0) < 1e-11);
    }
}

TEST_CASE("gamma duplication identity") {
    for (cplx z : {cplx(0.3, 0.0), cplx(1.2, 3.0), cplx(2.5, -7.0), cplx(0.25, 40.0)}) {
        cplx lhs = std::exp(lgamma(2.0 * z));
        cplx rhs = std::exp(-0.5 * std::log(PI) + (2.0 * z - 1.0) * std::log(2.0) +
                            lgamma(z) + lgamma(z + 0.5));
        CHECK(std::abs(lhs / rhs - 1.0) < 1e-11);
    }
}

TEST_CASE("gamma half-integer and large modulus") {
    // Gamma(1/2 + 5i) through the reflection residual
    cplx z(0.5, 5.0);
    cplx resid = cgamma(z) * cgamma(1.0 - z) - PI / std::sin(PI * z);
    CHECK(std::abs(resid) < 1e-12 * std::abs(PI / std::sin(PI * z)));
    // |z| ~ 200 still >= 12 digits against the recurrence Gamma(z+1) = z Gamma(z)
    cplx w(150.0, 120.0);
    CHECK(std::abs(std::exp(lgamma(w + 1.0) - lgamma(w)) / w - 1.0) < 1e-12);
}

TEST_CASE("digamma") {
    CHECK(std::abs(digamma(cplx(1.0)) + EULER_GAMMA) < 1e-13);
    // psi(1/2) = -gamma - 2 ln 2
    CHECK(std::abs(digamma(cplx(0.5)) + EULER_GAMMA + 2.0 * std::log(2.0)) < 1e-12);
    // recurrence psi(z+1) = psi(z) + 1/z
    cplx z(0.3, 1.4);
    CHECK(std::abs(digamma(z + 1.0) - digamma(z) - 1.0 / z) < 1e-12);
}

TEST_CASE("bernoulli numbers and polynomials") {
    CHECK(bernoulli_number(0) == doctest::Approx(1.0));
    CHECK(bernoulli_number(1) == doctest::Approx(-0.5));
    CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0));
    CHECK(bernoulli_number(4) == doctest::Approx(-1.0 / 30.0));
    CHECK(bernoulli_number(12) == doctest::Approx(-691.0 / 2730.0).epsilon(1e-12));
    CHECK(std::abs(bernoulli_poly(2, cplx(0.5)) - cplx(-1.0 / 12.0)) < 1e-15);
    CHECK(std::abs(bernoulli_poly(4, cplx(0.5)) - cplx(7.0 / 240.0)) < 1e-15);
    // B_n(x+1) - B_n(x) = n x^{n-1}
    cplx x(0.37, 0.0);
    CHECK(std::abs(bernoulli_poly(6, x + 1.0) - bernoulli_poly(6, x) -
                   6.0 * std::pow(x, 5.0)) < 1e-13);
}

TEST_CASE("zeta classical values") {
    CHECK(std::abs(zeta(cplx(2.0)) - PI * PI / 6.0) < 1e-13);
    CHECK(std::abs(zeta(cplx(4.0)) - std::pow(PI, 4.0) / 90.0) < 1e-13);
    CHECK(std::abs(zeta(cplx(0.0)) - cplx(-0.5)) < 1e-13);
    CHECK(std::abs(zeta(cplx(-1.0)) - cplx(-1.0 / 12.0)) < 1e-11);
    CHECK(std::abs(zeta(cplx(-3.0)) - cplx(1.0 / 120.0)) < 1e-11);
    CHECK_THROWS_AS(zeta(cplx(1.0)), std::domain_error);
}

TEST_CASE("zeta against an independent truncation oracle") {
    // Dirichlet series with integral tail correction at large Re
    cplx s(3.0, 2.0);
    cplx direct = 0.0;
    for (int n = 1; n <= 200000; ++n) direct += std::exp(-s * std::log(n));
    // tail ~ N^{1-s}/(s-1) + N^{-s}/2
    double N = 200000.0;
    direct += std::exp((1.0 - s) * std::log(N + 1.0)) / (s - 1.0);
    CHECK(std::abs(zeta(s) - direct) < 1e-10);

    // s = 1 + 2i against Euler-Maclaurin with a very different truncation is
    // covered by construction; check conjugate symmetry instead
    cplx v = zeta(cplx(1.0, 2.0));
    cplx vc = zeta(cplx(1.0, -2.0));
    CHECK(std::abs(v - std::conj(vc)) < 1e-13);
}

TEST_CASE("zeta functional equation residual on a grid") {
    for (double re : {-1.5, -0.5, 0.3, 0.5}) {
        for (double im : {0.7, 3.0, 14.134, 30.0, 80.0}) {
            cplx s(re, im);
            cplx lhs = zeta(s);
            cplx rhs = std::pow(2.0, s) * std::pow(PI, s - 1.0) * std::sin(0.5 * PI * s) *
                       cgamma(1.0 - s) * zeta(1.0 - s);
            CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("hurwitz zeta") {
    cplx s(1.7, 0.9);
    CHECK(std::abs(hurwitz_zeta(s, 1.0) - zeta(s)) < 1e-12);
    // multiplication identity: zeta(s,1/2) = (2^s - 1) zeta(s)
    CHECK(std::abs(hurwitz_zeta(cplx(2.0), 0.5) - PI * PI / 2.0) < 1e-12);
    CHECK(std::abs(hurwitz_zeta(s, 0.5) - (std::pow(2.0, s) - 1.0) * zeta(s)) < 1e-11);
    // continuation: zeta(-1, a) = -B_2(a)/2
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
        cplx expect = -bernoulli_poly(2, cplx(a)) / 2.0;
        CHECK(std::abs(hurwitz_zeta(cplx(-1.0), a) - expect) < 1e-12);
    }
    // shift identity: zeta(s, a) = a^{-s} + zeta(s, a + 1)
    cplx lhs = hurwitz_zeta(s, 0.2);
    cplx rhs = std::exp(-s * std::log(0.2)) + hurwitz_zeta(s, 1.2);
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(lhs));
}

TEST_CASE("upper incomplete gamma") {
    // Gamma(1, x) = e^{-x}
    CHECK(std::abs(upper_gamma(cplx(1.0), 2.3) - std::exp(-2.3)) < 1e-14);
    // Gamma(a, x) recurrence: Gamma(a+1,x) = a Gamma(a,x) + x^a e^{-x}
    cplx a(2.3, 1.1);
    double x = 4.2;
    cplx lhs = upper_gamma(a + 1.0, x);
    cplx rhs = a * upper_gamma(a, x) + std::pow(cplx(x), a) * std::exp(-x);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
}

TEST_CASE("erfcx") {
    CHECK(erfcx(0.0) == doctest::Approx(1.0));
    CHECK(erfcx(1.0) == doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-13));
    CHECK(erfcx(50.0) == doctest::Approx(1.0 / (50.0 * SQRT_PI) * (1 - 1.0 / 5000.0 + 3.0 / 4.0 / 6250000.0)).epsilon(1e-10));
}
