#ifndef KUZVER_BESSEL_IMAG_HPP
#define KUZVER_BESSEL_IMAG_HPP

// Bessel machinery for purely imaginary orders 2ir, the backbone of the
// oscillatory kernels and the Kontorovich-Lebedev pair.  Everything here is
// evaluated in a scaled form that stays O(1):
//
//   k0i(x, r)  =  -Im J_{2ir}(x) / sinh(pi r)
//              =  (J_{2ir}(x) - J_{-2ir}(x)) / (2 i sinh(pi r)) * (-1)  ... real
//   kki(x, r)  =  cosh(pi r) K_{2ir}(x)                                ... real
//
// Three evaluation regimes per function: the defining power series in a
// Pochhammer-normalized form (small x^2 / r), a rotated-contour integral
// representation (small r), and continuation along the Bessel ODE in x
// seeded from the series (everything else).  Regime boundaries were fixed
// by cross-validation; outside the certified window the routines throw.

#include "kuzver/numeric.hpp"

namespace kuzver::special {

// k0i(x,r): real, even in r; k0i(x,0) = -Y_0(x).
double k0i(double x, double r);
// batched evaluation along ascending x for one r (single ODE sweep).
std::vector<double> k0i_sweep(double r, const std::vector<double>& xs);

// kki(x,r) = cosh(pi r) K_{2ir}(x): real, even in r; kki(x,0) = K_0(x).
double kki(double x, double r);
std::vector<double> kki_sweep(double r, const std::vector<double>& xs);

// J_{2iu}(x) and its x-derivative for real u, |u| <= 4.5, via rotated
// Mehler-Sonine contours; valid for all 0 < x <= 500.
void j_imag_order(double u, double x, cplx& J, cplx& dJ);

// regime probes used by the cross-validation tests; each pins one method
// regardless of where the dispatcher would switch.
double k0i_series_probe(double x, double r);
double k0i_contour_probe(double x, double r);
double kki_integral_probe(double x, double r);
void j_imag_order_series_probe(double u, double x, cplx& J, cplx& dJ);
void j_imag_order_contour_probe(double u, double x, cplx& J, cplx& dJ);

} // namespace kuzver::special

#endif
