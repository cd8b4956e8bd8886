#ifndef KUZVER_KERNELS_HPP
#define KUZVER_KERNELS_HPP

// Oscillatory Bessel kernels k0/k1, the gamma factor, the four A_{jk}
// kernels (hypergeometric closed forms plus a defining-integral quadrature
// oracle), and the B kernels built from A pairs.
//
// Closed-form strategy: each kernel has one representation that stays
// regular at the degenerate corners it is used in --
//   A00: the connection form valid for all x (singular only at s = 1/2,
//        where the analytic epsilon-derivative limit is used),
//   A01, A11: the -x^2 series forms (singular only at nu = 1/2, handled by
//        the odd-bracket epsilon-derivative),
//   A10: the 1-x^2 form, regular everywhere in scope.
// The remaining printed representations are kept as cross-check routes.

#include "kuzver/numeric.hpp"

namespace kuzver::kernels {

// k0(x,nu) = (J_{2nu-1}(x) - J_{1-2nu}(x)) / (2 cos pi nu); at integer nu = l
// this degenerates to (-1)^l J_{2l-1}(x).
cplx k0(double x, cplx nu);
// k1(x,nu) = (2/pi) sin(pi nu) K_{2nu-1}(x)
cplx k1(double x, cplx nu);

// 2^{2u-1} Gamma(u+v-1/2) Gamma(u-v+1/2) / pi, and its log for contour work
cplx gamma_factor(cplx u, cplx v);
cplx log_gamma_factor(cplx u, cplx v);

struct KernelPoint {
    int j = 0, k = 0;   // kernel indices in {0,1}
    cplx r;             // spectral parameter: real, or +- i(l - 1/2)
    double x = 1.0;     // > 0
    cplx s;
    cplx nu;            // Re nu = 1/2, or the 1/2 limits
};

// closed-form evaluation through the regular-representation dispatcher
cplx kernel_A_closed(const KernelPoint& p);

// individual printed representations (cross-validation routes); id names the
// proposition: 47, 48, 49, 410, 411, 412, 413, 414, 415, 416.
cplx kernel_A_rep(const KernelPoint& p, int rep_id);

// adaptive quadrature of the defining integral; ~1e-7 absolute, serves as
// the oracle for the closed forms.  Throws outside the convergence window.
cplx kernel_A_quadrature(const KernelPoint& p, double tol = 1e-8);

// B_{jk}(r,u; s,nu; rho,mu) by x-quadrature over closed-form A factors
cplx kernel_B_jk(int j, int k, cplx r, cplx u, cplx s, cplx nu, cplx rho, cplx mu,
                 double tol = 1e-8);
// B_j = B_{j0} + B_{j1}
cplx kernel_B(int j, cplx r, cplx u, cplx s, cplx nu, cplx rho, cplx mu,
              double tol = 1e-8);
// b_{j,l}: B_j at u = -(l - 1/2) i
cplx kernel_b_l(int j, int l, cplx r, cplx s, cplx nu, cplx rho, cplx mu);

// Mellin-contour construction of B_00 (independent oracle)
cplx kernel_B00_contour(cplx r, cplx u, cplx s, cplx nu, cplx rho, cplx mu);

} // namespace kuzver::kernels

#endif
