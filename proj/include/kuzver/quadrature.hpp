#ifndef KUZVER_QUADRATURE_HPP
#define KUZVER_QUADRATURE_HPP

// Quadrature toolbox: adaptive Gauss-Legendre for smooth integrands,
// tanh-sinh for endpoint-singular ones, a circle rule for residues and
// an asymptotic evaluator for algebraic-times-oscillatory tails.

#include "kuzver/numeric.hpp"
#include <functional>

namespace kuzver {

struct GLRule {
    std::vector<double> x;  // nodes on (-1,1)
    std::vector<double> w;
};

// Gauss-Legendre nodes via Newton iteration on the Legendre recurrence.
const GLRule& gl_rule(int n);

struct QuadResult {
    cplx value;
    double error_estimate;
    int evaluations;
};

// Adaptive Gauss-Legendre on [a,b]; error estimated by bisected refinement.
QuadResult integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, int max_depth = 14);

// tanh-sinh on (a,b); tolerates integrable endpoint singularities.
QuadResult integrate_tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                               double tol, int max_level = 12);

// \int_a^\infty f, f eventually decaying at least exponentially; panels
// double in width until one contributes below tol * |total|.
QuadResult integrate_to_inf(const std::function<cplx(double)>& f, double a,
                            double rel_tol, double abs_tol,
                            double first_panel = 1.0, int max_panels = 80);

// (1/2*pi*i) \oint f dz on the circle |z - center| = radius (trapezoid rule,
// spectrally accurate); returns the residue-sum estimate inside.
cplx contour_circle(const std::function<cplx(cplx)>& f, cplx center, double radius,
                    int n = 64);

// \int_X^\infty x^lambda e^{i omega x} dx by the integration-by-parts
// asymptotic series; requires |omega| X reasonably large.
cplx oscillatory_tail(cplx lambda, double omega, double X, int max_terms = 18);

} // namespace kuzver

#endif
