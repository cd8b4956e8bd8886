#ifndef KUZVER_SPECIAL_HPP
#define KUZVER_SPECIAL_HPP

// Complex special functions built in-repo: Gamma (Lanczos), digamma,
// Riemann/Hurwitz zeta (Euler-Maclaurin), Bernoulli numbers/polynomials,
// the Bessel family incl. purely imaginary orders, and 2F1 (see hyp2f1.hpp).

#include "kuzver/numeric.hpp"

namespace kuzver::special {

// --- Gamma family ---------------------------------------------------------

// log Gamma(z), principal expression from the Lanczos sum; exp(lgamma(z))
// reproduces Gamma(z).  Poles at z = 0, -1, -2, ... raise std::domain_error.
cplx lgamma(cplx z);
// log sin(pi z) / log cos(pi z), stable for large |Im z|
cplx log_sin_pi(cplx z);
inline cplx log_cos_pi(cplx z) { return log_sin_pi(z + 0.5); }
cplx cgamma(cplx z);
cplx digamma(cplx z);

// gamma-quotient Gamma(a)/Gamma(b) evaluated in log space.
cplx gamma_ratio(cplx a, cplx b);

// --- Bernoulli -------------------------------------------------------------

// B_0, B_1, B_2, ... (B_1 = -1/2), exact doubles up to index 60.
double bernoulli_number(int n);
// Bernoulli polynomial B_n(x), complex argument, n <= 60.
cplx bernoulli_poly(int n, cplx x);

// --- zeta family -----------------------------------------------------------

// Riemann zeta, Euler-Maclaurin; reliable for |Im s| <= 120, -12 <= Re s <= 12
// (reflection extends Re s below).  Pole at s = 1 raises std::domain_error.
cplx zeta(cplx s);
// Hurwitz zeta(s, a) for 0 < a <= 1 (and any a > 0).
cplx hurwitz_zeta(cplx s, double a);

// --- incomplete gamma ------------------------------------------------------

// Upper incomplete Gamma(a, x), complex a, real x > 0.
cplx upper_gamma(cplx a, double x);

// scaled complementary error function exp(x^2) erfc(x), x >= 0
double erfcx(double x);

// --- Bessel, real argument -------------------------------------------------

// Integer and real orders.  Methods: power series, Miller backward
// recurrence, Hankel asymptotics; each routine rejects arguments outside
// its certified window instead of degrading silently.
double bessel_j(double nu, double x);     // nu >= 0 real or any integer
double bessel_y0(double x);
double bessel_y1(double x);
double bessel_y(double nu, double x);     // small-|nu| real orders, moderate x
double bessel_i0(double x);
double bessel_i1(double x);
double bessel_k0(double x);
double bessel_k1(double x);
double bessel_k(double nu, double x);     // real order via the cosh integral
cplx  bessel_k_complex_order(cplx nu, double x);  // cosh integral, complex order

// vector of J_0..J_nmax at one argument (backward recurrence, exact
// normalization); cheap way to get many integer orders at once.
std::vector<double> bessel_j_ladder(int nmax, double x);

// Public dispatcher mirroring the BesselKind contract.
enum class BesselKind { J, Y, I, K };
cplx bessel(BesselKind kind, cplx order, double x);

} // namespace kuzver::special

#endif
