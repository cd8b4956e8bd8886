#include "doctest.h"
#include "kuzver/transforms.hpp"
#include "kuzver/special.hpp"
#include "kuzver/quadrature.hpp"

using namespace kuzver;
using namespace kuzver::transforms;
using special::bessel_j;
using special::lgamma;
using special::cgamma;

static TestFunction default_h() { return make_gaussian_h(3.0); }

TEST_CASE("shipped test function basics") {
    auto h = default_h();
    CHECK(std::abs(h(cplx(0.0, 0.5))) < 1e-14);   // zero at i/2
    CHECK(std::abs(h(cplx(0.0, 1.5))) < 1e-14);   // zero at 3i/2
    CHECK(std::abs(h(cplx(1.3)) - h(cplx(-1.3))) < 1e-15);
    CHECK(h.r_max() > 5.0);
    CHECK(h.r_max() < 40.0);
}

TEST_CASE("phi_from_h stability and independent route") {
    auto h = default_h();
    // doubling the truncation/panel resolution changes nothing material
    double p1 = phi_from_h(h, 1.0);
    auto hv = h;  // same h, finer panels via a grid call
    auto grid = phi_grid(hv, {1.0, 2.0, 25.0});
    CHECK(p1 == doctest::Approx(grid[0]).epsilon(1e-10));
    // independent adaptive quadrature of the r-integral
    auto f = [&](double r) -> cplx {
        return special::k0i(1.0, r) * h(cplx(r)).real() * chi_weight(r);
    };
    cplx alt = 2.0 * integrate_gl(f, 1e-9, h.r_max(), 1e-13, 1e-16, 14).value;
    CHECK(p1 == doctest::Approx(alt.real()).epsilon(1e-9));
    // linearity in h: scaling
    TestFunction h2 = h;
    h2.eval = [h](cplx r) { return 3.0 * h(r); };
    CHECK(phi_from_h(h2, 2.0) == doctest::Approx(3.0 * grid[1]).epsilon(1e-10));
}

TEST_CASE("h_from_phi kills odd-order Bessel input") {
    RealFunction j3{[](double x) { return bessel_j(3.0, x); }, 600.0};
    for (double r : {0.5, 1.3}) {
        double v = h_from_phi(j3, r);
        CHECK(std::abs(v) < 5e-3);  // exact value is 0; truncation noise only
    }
}

TEST_CASE("h_from_phi against the Mellin-Parseval oracle") {
    // phi = x^3 e^{-x}: M[phi](z) = Gamma(z+3);
    // h(r) = pi (1/2 pi i) int gamma(z/2,1/2+ir) cos(pi z/2) Gamma(3-z) dz
    RealFunction phi{[](double x) { return x * x * x * std::exp(-x); }, 60.0};
    double r = 0.8;
    double direct = h_from_phi(phi, r);
    double c = 0.5;
    auto f = [&](double y) -> cplx {
        cplx z(c, y);
        cplx w = 0.5 * z;
        cplx g = std::exp(lgamma(w + cplx(0.0, r)) + lgamma(w - cplx(0.0, r)) +
                          (2.0 * w - 1.0) * std::log(2.0) - std::log(PI) +
                          special::log_cos_pi(w) + lgamma(3.0 - z));
        return g;
    };
    cplx oracle = 0.5 * integrate_gl(f, -60.0, 60.0, 1e-11, 1e-16, 14).value;
    CHECK(direct == doctest::Approx(oracle.real()).epsilon(1e-7));
}

TEST_CASE("g_from_phi Weber-Schafheitlin values") {
    RealFunction j3{[](double x) { return bessel_j(3.0, x); }, 3000.0};
    double g2 = g_from_phi(j3, 2);   // same order: 1/2
    double g4 = g_from_phi(j3, 4);   // orthogonal: 0
    CHECK(std::abs(g2 - 0.5) < 1e-3);
    CHECK(std::abs(g4) < 1e-3);
}

TEST_CASE("Kontorovich-Lebedev round trip") {
    RealFunction psi{[](double x) { return x * x * std::exp(-x - 1.0 / x); }, 45.0};
    // tabulate the forward transform, then invert on a grid
    const double rmax = 22.0, dr = 0.02;
    int n = static_cast<int>(rmax / dr) + 1;
    std::vector<double> tab(n);
    for (int i = 0; i < n; ++i) tab[i] = kl_forward(psi, i * dr);
    auto h = [&](double r) -> double {
        double t = r / dr;
        int i = std::clamp(static_cast<int>(t), 1, n - 3);
        double u = t - i;
        // Catmull-Rom cubic
        double m0 = 0.5 * (tab[i + 1] - tab[i - 1]);
        double m1 = 0.5 * (tab[i + 2] - tab[i]);
        double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * tab[i] + (u3 - 2 * u2 + u) * m0 +
               (-2 * u3 + 3 * u2) * tab[i + 1] + (u3 - u2) * m1;
    };
    CHECK(std::abs(tab[0] - kl_forward(psi, 0.0)) < 1e-14);
    // evenness of the forward transform in r
    CHECK(kl_forward(psi, 1.7) == doctest::Approx(kl_forward(psi, -1.7)).epsilon(1e-12));
    double sup = 0.0;
    for (double x : {0.1, 0.2, 0.5, 1.0, 2.0, 3.5, 5.0, 7.0, 10.0}) {
        double back = kl_inverse(h, rmax, x);
        sup = std::max(sup, std::abs(back - psi.f(x)));
    }
    CHECK(sup < 1e-6);
}

TEST_CASE("regularization coefficients") {
    auto h = default_h();
    // N = 1: c(l1) = (-1)^{l1} int h dchi
    auto K1 = reg_coeffs(h, {2});
    double m0 = chi_moment(h, 0);
    CHECK(K1.c[0] == doctest::Approx(m0).epsilon(1e-12));
    auto K1b = reg_coeffs(h, {3});
    CHECK(K1b.c[0] == doctest::Approx(-m0).epsilon(1e-12));

    // production set: all five moment equations satisfied
    auto K = reg_coeffs(h, {2, 3, 4, 5, 7});
    for (int m = 0; m < 5; ++m) {
        double lhs = 0.0;
        for (size_t i = 0; i < K.L.size(); ++i) {
            double l = K.L[i];
            lhs += std::pow(l - 0.5, 2.0 * m) * ((K.L[i] % 2 == 0) ? 1.0 : -1.0) * K.c[i];
        }
        double rhs = ((m % 2 == 0) ? 1.0 : -1.0) * chi_moment(h, m);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
    // singular-term identity: sum (-1)^l c(l) = int h dchi (m = 0 row)
    double s0 = 0.0;
    for (size_t i = 0; i < K.L.size(); ++i)
        s0 += ((K.L[i] % 2 == 0) ? 1.0 : -1.0) * K.c[i];
    CHECK(s0 == doctest::Approx(m0).epsilon(1e-12));
}

TEST_CASE("chi moments against the closed Gaussian form") {
    // h = (u^2+1/4)(u^2+9/4) e^{-(u/A)^2}; write tanh(pi u) = 1 - 2/(e^{2 pi u}+1)
    // and expand the correction in e^{-2 pi k u}: each piece reduces to
    // Gaussian moments and erfcx values.
    double A = 3.0;
    auto h = make_gaussian_h(A);
    for (int m : {0, 1, 3}) {
        // exact part: (2/pi) int_0^inf u^{2m+1} p(u^2) e^{-u^2/A^2} * 2 du, p = poly
        auto gauss_mom = [&](int j) {  // int_0^inf u^{2j+1} e^{-u^2/A^2} du = j! A^{2j+2}/2
            double f = 1.0;
            for (int i = 2; i <= j; ++i) f *= i;
            return 0.5 * f * std::pow(A * A, j + 1.0);
        };
        auto poly_mom = [&](int j) {  // moments of u^{2j+1} p(u^2) e^{...}
            return gauss_mom(j + 2) + 2.5 * gauss_mom(j + 1) + 0.5625 * gauss_mom(j);
        };
        double main = 2.0 * (2.0 / PI) * poly_mom(m);
        // correction: -(2/pi) * 2 * sum_k (-1)^{k-1} int u^{2m+1} p e^{-u^2/A^2 - 2 pi k u} du * 2
        double corr = 0.0;
        for (int k = 1; k <= 60; ++k) {
            double beta = 2.0 * PI * k;
            // I_j = int_0^inf u^j e^{-u^2/A^2 - beta u} du via erfcx recursion
            // I_0 = (A sqrt(pi)/2) erfcx(beta A / 2)
            std::vector<double> I(2 * m + 6, 0.0);
            double e0 = 0.5 * A * SQRT_PI * special::erfcx(0.5 * beta * A);
            I[0] = e0;
            // I_1 = (A^2/2)(1 - beta I_0 * (2/A^2) * (A^2/2)) : use recursion
            // I_1 = A^2/2 - (beta A^2/2) I_0
            I[1] = 0.5 * A * A - 0.5 * beta * A * A * I[0];
            for (size_t j = 2; j < I.size(); ++j)
                I[j] = 0.5 * A * A * ((j - 1.0) * I[j - 2] - beta * I[j - 1]);
            auto pI = [&](int j) { return I[2 * j + 5] + 2.5 * I[2 * j + 3] + 0.5625 * I[2 * j + 1]; };
            corr += (k % 2 == 1 ? 1.0 : -1.0) * pI(m);
        }
        double expect = main - 2.0 * (2.0 / PI) * 2.0 * corr;
        CHECK(chi_moment(h, m) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("mellin transform: defining equality via two routes") {
    auto h = make_gaussian_h(2.2);
    for (cplx w : {cplx(0.15, 0.0), cplx(0.2, 0.4)}) {
        cplx a = mellin_phi_hat(h, w);
        cplx b = mellin_phi_direct(h, w);
        CHECK(std::abs(a - b) < 2e-6 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("mellin continuation is consistent across Re w = 0") {
    auto h = make_gaussian_h(2.2);
    // both the Gamma-pair form (Re w > 0) and the continued form (Re w < 0)
    // must agree with the direct x-integral route
    cplx wp(0.1, 0.3), wm(-0.1, 0.3);
    CHECK(std::abs(mellin_phi_hat(h, wp) - mellin_phi_direct(h, wp)) < 2e-6);
    CHECK(std::abs(mellin_phi_hat(h, wm) - mellin_phi_direct(h, wm)) < 2e-6);
    // smooth limit towards Re w = 0 from both sides
    cplx left = mellin_phi_hat(h, cplx(-1e-5, 0.3));
    cplx right = mellin_phi_hat(h, cplx(1e-5, 0.3));
    CHECK(std::abs(left - right) < 1e-4 * std::abs(right));
    // conjugation symmetry for real-valued even h
    cplx v1 = mellin_phi_hat(h, cplx(0.2, 0.7));
    cplx v2 = mellin_phi_hat(h, cplx(0.2, -0.7));
    CHECK(std::abs(v1 - std::conj(v2)) < 1e-12 * std::abs(v1));
}

TEST_CASE("barnes polynomials and estimate") {
    CHECK(std::abs(barnes_p(1, cplx(0.0)) - 1.0 / 6.0) < 1e-15);
    CHECK(std::abs(barnes_p(2, cplx(0.0)) - 1.0 / 72.0) < 1e-15);
    // p3(0): validate the full 1/w^3 coefficient against Stirling directly
    for (double wv : {40.0, 60.0}) {
        cplx w(wv, 0.0), z(0.3, 0.2);
        cplx lhs = std::exp(lgamma(w + z) + lgamma(w - z)) /
                   (TWO_PI * std::exp((2.0 * w - 1.0) * std::log(w) - 2.0 * w));
        cplx series = 1.0 + barnes_p(1, z) / w + barnes_p(2, z) / (w * w) +
                      barnes_p(3, z) / (w * w * w);
        CHECK(std::abs(lhs - series) < 30.0 / std::pow(wv, 4.0));
    }
    // Q(w, z) leading term at z = 1/2: B_2(1/2)/(2w) = -1/(24 w)
    CHECK(std::abs(special::bernoulli_poly(2, cplx(0.5)) / 2.0 - cplx(-1.0 / 24.0)) < 1e-15);

    auto h = default_h();
    cplx w(0.25, 30.0);
    cplx ratio = barnes_estimate(h, w, 1) / mellin_phi_hat(h, w);
    CHECK(std::abs(ratio - 1.0) < 0.1);
    cplx w2(0.25, 100.0);
    cplx ratio2 = barnes_estimate(h, w2, 1) / mellin_phi_hat(h, w2);
    CHECK(std::abs(ratio2 - 1.0) < 0.01);
}

TEST_CASE("regularized decay and kernel bounds") {
    auto h = default_h();
    auto K = reg_coeffs(h, {2, 3, 4, 5, 7});
    std::vector<double> grid{20.0, 28.0, 40.0, 56.0, 80.0};
    double slope = decay_probe(K, 0.25, grid);
    CHECK(slope == doctest::Approx(2.0 * 0.25 - 6.0).epsilon(0.04));  // -5.5 +- 0.2

    // |Phi_N(x)| <= C min(x^3, x^{-1+eps}) on a sample
    double c3 = 0.0, cinv = 0.0;
    for (double x : {0.01, 0.05, 0.2}) {
        c3 = std::max(c3, std::abs(phi_reg(K, x)) / (x * x * x));
    }
    for (double x : {5.0, 20.0, 60.0, 100.0}) {
        cinv = std::max(cinv, std::abs(phi_reg(K, x)) * std::pow(x, 0.9));
    }
    CHECK(c3 < 1e4);    // finite constant: x^3 envelope holds
    CHECK(cinv < 1e4);  // finite constant: x^{-1+eps} envelope holds
    // phi_reg with c = 0 reduces to phi_from_h
    RegularizedKernel K0 = K;
    std::fill(K0.c.begin(), K0.c.end(), 0.0);
    CHECK(phi_reg(K0, 1.3) == doctest::Approx(phi_from_h(h, 1.3)).epsilon(1e-12));
}

TEST_CASE("contour coefficients decay") {
    auto h = default_h();
    auto K = reg_coeffs(h, {2, 3, 4, 5, 7});
    CoeffParams p{cplx(0.7), cplx(0.5, 0.6), cplx(0.65), cplx(0.5, 0.4), 0.3};

    // |h0(r)| = O(r^{-5/2}): fitted slope on r in [10, 40]
    std::vector<double> lr, lv;
    for (double r : {10.0, 14.0, 20.0, 28.0, 40.0}) {
        lr.push_back(std::log(r));
        lv.push_back(std::log(std::abs(coeff_h0(r, p, K))));
    }
    double slope = fit_slope(lr, lv);
    CHECK(slope == doctest::Approx(-2.5).epsilon(0.12));  // -2.5 +- 0.3

    // |g(k)| <= C k^{-2+2eps} on k in [6, 30]
    double C = std::abs(coeff_g(6, p, K)) * std::pow(6.0, 1.9);
    for (int k : {10, 18, 30}) {
        double gk = std::abs(coeff_g(k, p, K));
        CHECK(gk * std::pow(static_cast<double>(k), 1.9) < 3.0 * C + 1e-12);
    }
}
