#ifndef KUZVER_TRANSFORMS_HPP
#define KUZVER_TRANSFORMS_HPP

// The integral-transform stack: the spectral weight, the phi <-> h pair, the
// Neumann coefficients g(k), the Kontorovich-Lebedev pair, the Mellin
// transform with its analytic continuation and Barnes asymptotics, the
// regularization system, and the contour coefficient integrals h0, h1, g.

#include "kuzver/numeric.hpp"
#include <functional>

namespace kuzver::transforms {

// spectral weight (2/pi) u tanh(pi u)
double chi_weight(double u);

// Even test function h(r), analytic in a strip; the evaluator accepts
// complex arguments (needed at r = i(l-1/2) and for residue terms).
struct TestFunction {
    std::function<cplx(cplx)> eval;
    double strip_halfwidth = 1.0;     // declared regularity strip
    double decay_scale = 4.0;         // Gaussian-class scale
    std::vector<int> enforced_zeros;  // l with h(i(l-1/2)) = 0
    double r_max(double rel_tol = 1e-16) const;
    cplx operator()(cplx r) const { return eval(r); }
};

// shipped family: h(r) = (r^2 + 1/4)(r^2 + 9/4) exp(-(r/A)^2)
TestFunction make_gaussian_h(double A);
// localized window pair exp(-((r -+ r0)/w)^2), no enforced zeros
TestFunction make_spike_h(double r0, double width);

// chi integral of f(u) h(u) over the real line for even integrands
cplx chi_integral(const TestFunction& h, const std::function<cplx(double)>& f,
                  double rel_tol = 1e-12);

struct RealFunction {
    std::function<double(double)> f;
    double x_max = 50.0;  // support bound used by the quadratures
};

// phi(x) = int k0(x, 1/2 + ir) h(r) dchi(r)
double phi_from_h(const TestFunction& h, double x);
std::vector<double> phi_grid(const TestFunction& h, const std::vector<double>& xs);

// h(r) = pi int_0^inf k0(x, 1/2+ir) phi(x) dx/x
double h_from_phi(const RealFunction& phi, double r);
// g(k) = (2k-1) int_0^inf J_{2k-1}(x) phi(x) dx/x (direct route)
double g_from_phi(const RealFunction& phi, int k);

// Kontorovich-Lebedev pair
double kl_forward(const RealFunction& psi, double r);
double kl_inverse(const std::function<double(double)>& h, double r_max, double x);

// regularization
struct RegularizedKernel {
    TestFunction h;
    std::vector<int> L;
    std::vector<double> c;  // c(l) aligned with L
    int order() const { return static_cast<int>(L.size()); }
};

RegularizedKernel reg_coeffs(const TestFunction& h, const std::vector<int>& L);
// moment int u^{2m} h dchi (exposed for the closed-form moment test)
double chi_moment(const TestFunction& h, int m);
double phi_reg(const RegularizedKernel& K, double x);

// Mellin transform of phi (and of Phi_N when K is given): the Gamma-pair
// integral for Re w > 0, plus the continuation term on -1 < Re w <= 0.
cplx mellin_phi_hat(const TestFunction& h, cplx w, const RegularizedKernel* K = nullptr);

// Barnes asymptotic estimate of the same transform, truncation order M <= 3
cplx barnes_estimate(const TestFunction& h, cplx w, int M);

// independent route for the defining equality: direct quadrature of
// int phi(x) x^{2w-1} dx with the algebraic-oscillatory tail evaluated from
// phi's large-x asymptotic series (assembled from h)
cplx mellin_phi_direct(const TestFunction& h, cplx w);
// the Barnes polynomials p_k(z), k = 1..3
cplx barnes_p(int k, cplx z);

// fitted slope of log |Phi_N(2w)| against log |w| at fixed Re w
double decay_probe(const RegularizedKernel& K, double re_w,
                   const std::vector<double>& im_w_grid);

// contour coefficient integrals on Re w = Delta
struct CoeffParams {
    cplx s, nu, rho, mu;
    double contour_delta;
};
cplx coeff_h0(double r, const CoeffParams& p, const RegularizedKernel& K);
cplx coeff_h1(double r, const CoeffParams& p, const RegularizedKernel& K);
cplx coeff_g(int k, const CoeffParams& p, const RegularizedKernel& K);

} // namespace kuzver::transforms

#endif
