#include "kuzver/kernels.hpp"
#include "kuzver/special.hpp"
#include "kuzver/bessel_imag.hpp"
#include "kuzver/hyp2f1.hpp"
#include "kuzver/quadrature.hpp"

namespace kuzver::kernels {

using special::lgamma;
using special::cgamma;
using special::digamma;
using special::hyp2f1;
using special::hyp2f1_pencil_deriv;
using special::k0i;
using special::kki;
using special::bessel_j;

namespace {
constexpr double LIMIT_TOL = 1e-7;  // window where the analytic limits take over

bool is_int_like(cplx v, long* out) {
    double rr = std::round(v.real());
    if (std::abs(v.real() - rr) < 1e-8 && std::abs(v.imag()) < 1e-10) {
        *out = std::lround(rr);
        return true;
    }
    return false;
}
} // namespace

// ---------------------------------------------------------------------------
// k0, k1, gamma factor
// ---------------------------------------------------------------------------
cplx k0(double x, cplx nu) {
    if (x <= 0.0) throw std::invalid_argument("k0: x <= 0");
    long l;
    if (is_int_like(nu, &l)) {
        // k0(x, l) = k0(x, 1-l) = (-1)^l J_{2l-1}(x) for l >= 1
        long ll = l >= 1 ? l : 1 - l;
        double sign = (ll % 2 == 0) ? 1.0 : -1.0;
        return cplx(sign * bessel_j(static_cast<double>(2 * ll - 1), x));
    }
    if (std::abs(nu.real() - 0.5) < 1e-9)
        return cplx(k0i(x, nu.imag()));
    if (std::abs(nu.imag()) < 1e-10) {
        double v = nu.real();
        double num = bessel_j(2.0 * v - 1.0, x) - bessel_j(1.0 - 2.0 * v, x);
        return cplx(num / (2.0 * std::cos(PI * v)));
    }
    throw std::invalid_argument("k0: nu must be real or on the critical line");
}

cplx k1(double x, cplx nu) {
    if (x <= 0.0) throw std::invalid_argument("k1: x <= 0");
    if (std::abs(nu.real() - 0.5) < 1e-9) {
        // (2/pi) sin(pi(1/2+it)) K_{2it}(x) = (2/pi) cosh(pi t) K_{2it}(x)
        return cplx((2.0 / PI) * kki(x, nu.imag()));
    }
    if (std::abs(nu.imag()) < 1e-10) {
        double v = nu.real();
        return cplx((2.0 / PI) * std::sin(PI * v) * special::bessel_k(2.0 * v - 1.0, x));
    }
    return (2.0 / PI) * std::sin(PI * nu) *
           special::bessel_k_complex_order(2.0 * nu - 1.0, x);
}

cplx log_gamma_factor(cplx u, cplx v) {
    return (2.0 * u - 1.0) * std::log(2.0) - std::log(PI) +
           lgamma(u + v - 0.5) + lgamma(u - v + 0.5);
}

cplx gamma_factor(cplx u, cplx v) { return std::exp(log_gamma_factor(u, v)); }

// ---------------------------------------------------------------------------
// closed forms
// ---------------------------------------------------------------------------
namespace {

struct ABP {
    cplx a, b, ap, bp, c, cp;
};

ABP abp(cplx s, cplx nu, cplx r) {
    cplx ir = cI() * r;
    return {s + nu - 0.5 + ir, s - nu + 0.5 + ir,
            s + nu - 0.5 - ir, s - nu + 0.5 - ir,
            1.0 + 2.0 * ir, 1.0 - 2.0 * ir};
}

cplx pref(cplx s) { return std::exp((1.0 - 2.0 * s) * std::log(TWO_PI)); }

// pencil derivative with an automatic Pfaff map for negative arguments
cplx pencil_F(cplx a, cplx da, cplx b, cplx db, cplx c, cplx dc, double z) {
    if (std::abs(z) <= 0.62)
        return hyp2f1_pencil_deriv(a, da, b, db, c, dc, z);
    if (z < 0.0) {
        // F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; w), w = z/(z-1)
        double w = z / (z - 1.0);
        cplx Fm = hyp2f1(a, c - b, c, w);
        cplx dFm = hyp2f1_pencil_deriv(a, da, c - b, dc - db, c, dc, w);
        return std::pow(1.0 - z, -a) * (-da * std::log(1.0 - z) * Fm + dFm);
    }
    if (std::abs(z) <= 0.8)
        return hyp2f1_pencil_deriv(a, da, b, db, c, dc, z);
    throw std::domain_error("pencil_F: argument too close to 1");
}

// odd-bracket nu -> 1/2 limit shared by reps 4.7 / 4.11 / 4.13 / 4.16:
//   bracket(nu) = p(nu) G(a)G(a')/G(2nu) x^{2nu} F(a,a';2nu;zx) - (mirror),
//   value = bracket / (2 cos pi nu) -> -P'(0)/pi at nu = 1/2.
// sin_prefactors selects p = sin pi(s+nu) (4.7/4.11) over p = 1 (4.13/4.16).
cplx nu_half_limit(cplx s, cplx r, double x, double zx, bool sin_prefactors) {
    cplx a0 = s + cI() * r;   // a at nu = 1/2
    cplx ap0 = s - cI() * r;
    cplx p0, dp;
    if (sin_prefactors) {
        p0 = std::sin(PI * (s + 0.5));
        dp = PI * std::cos(PI * (s + 0.5));
    } else {
        p0 = 1.0;
        dp = 0.0;
    }
    cplx G = std::exp(lgamma(a0) + lgamma(ap0));  // /Gamma(1)
    cplx F0 = hyp2f1(a0, ap0, cplx(1.0), zx);
    cplx dF = pencil_F(a0, 1.0, ap0, 1.0, cplx(1.0), 2.0, zx);
    cplx dlog = dp / p0 + digamma(a0) + digamma(ap0) - 2.0 * digamma(cplx(1.0)) +
                2.0 * std::log(x);
    cplx P0 = p0 * G * x * F0;
    cplx dP = P0 * dlog + p0 * G * x * dF;
    return -dP / PI;
}

// s -> 1/2 limit of representation 4.9 (x >= 0.45); regular in nu incl. 1/2.
cplx a00_s_half_limit(cplx nu, cplx r, double x) {
    double z = 1.0 - x * x;
    cplx a0 = nu + cI() * r, ap0 = nu - cI() * r;
    cplx b0 = 1.0 - nu + cI() * r, bp0 = 1.0 - nu - cI() * r;
    cplx F0 = hyp2f1(a0, ap0, cplx(1.0), z);
    cplx P2 = pencil_F(a0, 1.0, ap0, 1.0, cplx(1.0), 2.0, z);
    cplx psi_sum = digamma(a0) + digamma(ap0) + digamma(b0) + digamma(bp0);
    double L = std::log(std::abs(x * x - 1.0));
    return std::pow(cplx(x * x), nu) *
           (-P2 - F0 * (L + 2.0 * EULER_GAMMA + 0.5 * psi_sum));
}

} // namespace

cplx kernel_A_rep(const KernelPoint& p, int rep_id) {
    ABP q = abp(p.s, p.nu, p.r);
    const double x = p.x;
    const cplx s = p.s, nu = p.nu, r = p.r;
    cplx ir = cI() * r;
    switch (rep_id) {
        case 47: {  // A00, 0 <= x < 1
            if (x >= 1.0) throw std::domain_error("rep 4.7 needs x < 1");
            cplx t1 = std::sin(PI * (s + nu)) *
                      std::exp(lgamma(q.a) + lgamma(q.ap) - lgamma(2.0 * nu)) *
                      std::pow(cplx(x * x), nu) * hyp2f1(q.a, q.ap, 2.0 * nu, x * x);
            cplx t2 = std::sin(PI * (s - nu)) *
                      std::exp(lgamma(q.b) + lgamma(q.bp) - lgamma(2.0 - 2.0 * nu)) *
                      std::pow(cplx(x * x), 1.0 - nu) *
                      hyp2f1(q.b, q.bp, 2.0 - 2.0 * nu, x * x);
            return pref(s) * (t1 + t2) / (2.0 * std::cos(PI * nu));
        }
        case 48: {  // A00, x > 1
            if (x <= 1.0) throw std::domain_error("rep 4.8 needs x > 1");
            double w = 1.0 / (x * x);
            cplx t1 = std::cos(PI * (s + ir)) *
                      std::exp(lgamma(q.a) + lgamma(q.b) -
                               (q.c - 1.0) * std::log(x)) *
                      special::hyp2f1_reg(q.a, q.b, q.c, w);
            cplx t2 = std::cos(PI * (s - ir)) *
                      std::exp(lgamma(q.ap) + lgamma(q.bp) -
                               (q.cp - 1.0) * std::log(x)) *
                      special::hyp2f1_reg(q.ap, q.bp, q.cp, w);
            return pref(s) * cI() * std::pow(cplx(x), 1.0 - 2.0 * s) *
                   (t1 - t2) / (2.0 * std::sinh(PI * r));
        }
        case 49: {  // A00, all x
            double z = 1.0 - x * x;
            cplx t1 = std::sin(PI * s) * cgamma(2.0 * s - 1.0) *
                      std::exp((1.0 - 2.0 * s) * std::log(std::abs(x * x - 1.0))) *
                      std::pow(cplx(x * x), nu) *
                      hyp2f1(1.0 - q.b, 1.0 - q.bp, 2.0 - 2.0 * s, z);
            cplx ch = std::cosh(PI * r), sn = std::sin(PI * nu), ss = std::sin(PI * s);
            cplx D = ch * ch + sn * sn - ss * ss;
            cplx t2 = std::exp(lgamma(q.a) + lgamma(q.ap) + lgamma(q.b) + lgamma(q.bp) -
                               lgamma(2.0 * s)) /
                      (2.0 * PI * std::cos(PI * s)) * D * std::pow(cplx(x * x), nu) *
                      hyp2f1(q.a, q.ap, 2.0 * s, z);
            return pref(s) * (t1 + t2);
        }
        case 410: case 414: case 415: {  // 1/sinh(pi r) pair forms
            double w = (rep_id == 414) ? 1.0 / (x * x) : -1.0 / (x * x);
            if (rep_id == 414 && x <= 1.0) throw std::domain_error("rep 4.14 needs x > 1");
            bool cos_weights = (rep_id == 415);
            cplx w1 = cos_weights ? std::cos(PI * (s + ir)) : std::sin(PI * nu);
            cplx w2 = cos_weights ? std::cos(PI * (s - ir)) : std::sin(PI * nu);
            cplx t1 = w1 * std::exp(lgamma(q.a) + lgamma(q.b) -
                                    (q.c - 1.0) * std::log(x)) *
                      special::hyp2f1_reg(q.a, q.b, q.c, w);
            cplx t2 = w2 * std::exp(lgamma(q.ap) + lgamma(q.bp) -
                                    (q.cp - 1.0) * std::log(x)) *
                      special::hyp2f1_reg(q.ap, q.bp, q.cp, w);
            return pref(s) * cI() * std::pow(cplx(x), 1.0 - 2.0 * s) *
                   (t1 - t2) / (2.0 * std::sinh(PI * r));
        }
        case 411: case 416: {  // -x^2 series forms (A01 / A11)
            double z = -x * x;
            bool plus = (rep_id == 411);
            cplx f1 = plus ? std::sin(PI * (s + nu)) : std::cosh(PI * r);
            cplx f2 = plus ? std::sin(PI * (s - nu)) : std::cosh(PI * r);
            cplx t1 = f1 * std::exp(lgamma(q.a) + lgamma(q.ap) - lgamma(2.0 * nu)) *
                      std::pow(cplx(x * x), nu) * hyp2f1(q.a, q.ap, 2.0 * nu, z);
            cplx t2 = f2 * std::exp(lgamma(q.b) + lgamma(q.bp) - lgamma(2.0 - 2.0 * nu)) *
                      std::pow(cplx(x * x), 1.0 - nu) *
                      hyp2f1(q.b, q.bp, 2.0 - 2.0 * nu, z);
            cplx sum = plus ? (t1 + t2) : (t1 - t2);
            return pref(s) * sum / (2.0 * std::cos(PI * nu));
        }
        case 412: {  // A10, all x
            double z = 1.0 - x * x;
            return pref(s) * std::cosh(PI * r) * std::sin(PI * nu) *
                   std::exp(lgamma(q.a) + lgamma(q.ap) + lgamma(q.b) + lgamma(q.bp) -
                            lgamma(2.0 * s)) /
                   PI * std::pow(cplx(x * x), nu) * hyp2f1(q.a, q.ap, 2.0 * s, z);
        }
        case 413: {  // A10, x < 1
            if (x >= 1.0) throw std::domain_error("rep 4.13 needs x < 1");
            double z = x * x;
            cplx t1 = std::exp(lgamma(q.a) + lgamma(q.ap) - lgamma(2.0 * nu)) *
                      std::pow(cplx(x * x), nu) * hyp2f1(q.a, q.ap, 2.0 * nu, z);
            cplx t2 = std::exp(lgamma(q.b) + lgamma(q.bp) - lgamma(2.0 - 2.0 * nu)) *
                      std::pow(cplx(x * x), 1.0 - nu) *
                      hyp2f1(q.b, q.bp, 2.0 - 2.0 * nu, z);
            return pref(s) * std::cosh(PI * r) * (t1 - t2) / (2.0 * std::cos(PI * nu));
        }
        default:
            throw std::invalid_argument("kernel_A_rep: unknown representation id");
    }
}

cplx kernel_A_closed(const KernelPoint& p) {
    const bool nu_half = std::abs(p.nu - cplx(0.5)) < LIMIT_TOL;
    const bool s_half = std::abs(p.s - cplx(0.5)) < LIMIT_TOL;
    const int jk = 10 * p.j + p.k;
    switch (jk) {
        case 0: {  // A00
            if (s_half) {
                if (p.x >= 0.45) return a00_s_half_limit(p.nu, p.r, p.x);
                if (!nu_half) {
                    KernelPoint q = p;
                    q.s = 0.5;
                    return kernel_A_rep(q, 47);
                }
                // s = nu = 1/2, small x: odd-bracket limit of 4.7 at s = 1/2
                return nu_half_limit(cplx(0.5), p.r, p.x, p.x * p.x, true);
            }
            // 4.9 covers everything but degrades at the interval ends where
            // its argument approaches 1; route to the series-friendly forms.
            if (p.x < 0.4 && !nu_half) return kernel_A_rep(p, 47);
            bool r_safe = std::abs(p.r.real()) > 0.05 || std::abs(p.r.imag()) > 0.05;
            if (p.x > 2.5 && r_safe) return kernel_A_rep(p, 48);
            return kernel_A_rep(p, 49);
        }
        case 1: {  // A01
            if (nu_half)
                return pref(p.s) * nu_half_limit(p.s, p.r, p.x, -p.x * p.x, true);
            return kernel_A_rep(p, 411);
        }
        case 10: {  // A10
            if (p.x < 0.4) {
                if (nu_half)
                    return pref(p.s) * std::cosh(PI * p.r) *
                           nu_half_limit(p.s, p.r, p.x, p.x * p.x, false);
                return kernel_A_rep(p, 413);
            }
            return kernel_A_rep(p, 412);  // regular at s = 1/2 and nu = 1/2
        }
        case 11: {  // A11
            if (nu_half)
                return pref(p.s) * std::cosh(PI * p.r) *
                       nu_half_limit(p.s, p.r, p.x, -p.x * p.x, false);
            return kernel_A_rep(p, 416);
        }
        default:
            throw std::invalid_argument("kernel_A_closed: indices must be in {0,1}");
    }
}

// ---------------------------------------------------------------------------
// quadrature oracle
// ---------------------------------------------------------------------------
namespace {

// one kernel factor of the defining integral: small-argument leading terms,
// body evaluator, and the oscillatory-tail coefficient series when the
// factor decays only algebraically.
struct Factor {
    std::vector<std::pair<cplx, cplx>> head;  // sum coef * z^{expo} (+ O(z^{expo+2}))
    std::function<double(double)> eval;
    // f(z) ~ sqrt(2/(pi z)) Re[ U(z) e^{iz} ], U = sum u_k z^{-k}; empty when
    // the factor decays exponentially instead
    std::vector<cplx> tail_u;
    double tail_zmin = 30.0;
};

// U = (P + iQ) e^{-i phase} written as sum_k i^k a_k(mu) z^{-k}
std::vector<cplx> hankel_u(double mu, double phase, int nterms = 7) {
    std::vector<cplx> u(nterms, 0.0);
    double ak = 1.0;
    for (int k = 0; k < nterms; ++k) {
        u[k] = std::pow(cI(), static_cast<double>(k)) * ak;
        double odd = 2.0 * k + 1.0;
        ak *= (mu - odd * odd) / (8.0 * (k + 1.0));
    }
    cplx rot = std::exp(cplx(0.0, -phase));
    for (auto& v : u) v *= rot;
    return u;
}

Factor factor_k0_spectral(cplx r) {
    Factor f;
    if (std::abs(r.real()) < 1e-12 && std::abs(r.imag()) > 1e-12) {
        // r = +- i(l - 1/2): k0(y, 1/2+ir) = (-1)^l J_{2l-1}(y)
        double li = std::abs(r.imag()) + 0.5;
        long l = std::lround(li);
        if (std::abs(li - static_cast<double>(l)) > 1e-9)
            throw std::invalid_argument("quadrature: imaginary r must be i(l-1/2)");
        double sign = (l % 2 == 0) ? 1.0 : -1.0;
        int order = 2 * static_cast<int>(l) - 1;
        f.head = {{sign * std::pow(2.0, 1.0 - 2.0 * l) / std::tgamma(2.0 * l),
                   cplx(2.0 * l - 1.0)}};
        f.eval = [sign, order](double y) { return sign * bessel_j(order, y); };
        f.tail_u = hankel_u(4.0 * (2.0 * l - 1.0) * (2.0 * l - 1.0),
                            0.5 * PI * order + 0.25 * PI);
        for (auto& v : f.tail_u) v *= sign;
        f.tail_zmin = std::max(25.0, 0.6 * order * order);
        return f;
    }
    double rr = r.real();
    if (std::abs(rr) < 1e-9)
        throw std::invalid_argument("quadrature: r = 0 unsupported, take |r| > 1e-9");
    cplx A = -std::exp(cplx(0.0, -2.0 * rr * std::log(2.0)) - lgamma(cplx(1.0, 2.0 * rr))) /
             (2.0 * cI() * std::sinh(PI * rr));
    f.head = {{A, cplx(0.0, 2.0 * rr)}, {std::conj(A), cplx(0.0, -2.0 * rr)}};
    f.eval = [rr](double y) { return k0i(y, rr); };
    // k0i = -Im[(P+iQ) e^{i(y-pi/4)}] sqrt(2/(pi y)); -Im[w] = Re[i w]
    f.tail_u = hankel_u(-16.0 * rr * rr, 0.25 * PI);
    for (auto& v : f.tail_u) v *= cI();
    f.tail_zmin = std::max(25.0, 5.0 * (2.0 * rr) * (2.0 * rr));
    return f;
}

Factor factor_k0_nu(cplx nu) {
    if (std::abs(nu.real() - 0.5) > 1e-9)
        throw std::invalid_argument("quadrature: k0 factor needs Re nu = 1/2");
    return factor_k0_spectral(cplx(nu.imag(), 0.0));
}

Factor factor_k1_spectral(cplx r) {
    Factor f;
    if (std::abs(r.imag()) > 1e-12)
        throw std::invalid_argument("quadrature: k1 factor needs real r");
    double rr = r.real();
    if (std::abs(rr) < 1e-9)
        throw std::invalid_argument("quadrature: k1 factor needs |r| > 1e-9");
    // k1(y, 1/2+ir) = (2/pi) cosh(pi r) K_{2ir}(y);
    // K_{2ir}(y->0) = (1/2)[Gamma(-2ir)(y/2)^{2ir} + Gamma(2ir)(y/2)^{-2ir}] + O(y^2)
    cplx c1 = (1.0 / PI) * std::cosh(PI * rr) * cgamma(cplx(0.0, -2.0 * rr)) *
              std::exp(cplx(0.0, -2.0 * rr * std::log(2.0)));
    f.head = {{c1, cplx(0.0, 2.0 * rr)}, {std::conj(c1), cplx(0.0, -2.0 * rr)}};
    f.eval = [rr](double y) { return (2.0 / PI) * kki(y, rr); };
    f.tail_u.clear();
    return f;
}

Factor factor_k1_nu(cplx nu) {
    if (std::abs(nu.real() - 0.5) > 1e-9)
        throw std::invalid_argument("quadrature: k1 factor needs Re nu = 1/2");
    return factor_k1_spectral(cplx(nu.imag(), 0.0));
}

} // namespace

cplx kernel_A_quadrature(const KernelPoint& p, double tol) {
    const double x = p.x;
    const cplx s = p.s;
    Factor f1 = (p.j == 0) ? factor_k0_spectral(p.r) : factor_k1_spectral(p.r);
    int second = (p.j == 0) ? p.k : 1 - p.k;
    Factor f2 = (second == 0) ? factor_k0_nu(p.nu) : factor_k1_nu(p.nu);

    double e1min = 1e9, e2min = 1e9;
    for (auto& [cf, e] : f1.head) e1min = std::min(e1min, e.real());
    for (auto& [cf, e] : f2.head) e2min = std::min(e2min, e.real());
    if (2.0 * s.real() + e1min + e2min <= 0.05)
        throw std::domain_error("kernel_A_quadrature: outside the convergence window");
    bool osc_tail = !f1.tail_u.empty() && !f2.tail_u.empty();
    if (osc_tail && s.real() >= 0.48)
        throw std::domain_error("kernel_A_quadrature: A00-type integral needs Re s < 1/2");
    if (osc_tail && std::abs(1.0 - x) < 0.15)
        throw std::domain_error("kernel_A_quadrature: x too close to 1 for the tail split");

    const double delta = 1e-3;
    KahanSumC head;
    for (auto& [c1, e1] : f1.head)
        for (auto& [c2, e2] : f2.head) {
            cplx expo = 2.0 * s + e1 + e2;
            head.add(c1 * c2 * std::pow(cplx(x), e2) * std::pow(cplx(delta), expo) / expo);
        }

    auto integrand = [&](double y) -> cplx {
        return f1.eval(y) * f2.eval(x * y) * std::exp((2.0 * s - 1.0) * std::log(y));
    };
    double Y;
    if (osc_tail) {
        Y = std::max({f1.tail_zmin, f2.tail_zmin / x, 40.0});
    } else {
        double rate = (f1.tail_u.empty() ? 1.0 : 0.0) + (f2.tail_u.empty() ? x : 0.0);
        Y = 50.0 / std::max(rate, 1e-3) + 20.0;
    }
    auto body_log = integrate_gl([&](double u) -> cplx {
        double y = std::exp(u);
        return integrand(y) * y;
    }, std::log(delta), std::log(std::min(10.0, Y)), 0.1 * tol, 1e-18, 16);
    cplx body = body_log.value;
    if (Y > 10.0) body += integrate_gl(integrand, 10.0, Y, 0.1 * tol, 1e-18, 18).value;

    cplx tail = 0.0;
    if (osc_tail) {
        // f1(y) f2(xy) y^{2s-1} ~ (2/(pi sqrt(x) y)) Re[U e^{iy}] Re[V e^{ixy}] y^{2s-1}
        int n1 = f1.tail_u.size(), n2 = f2.tail_u.size();
        for (int sg1 = 0; sg1 < 2; ++sg1)
            for (int sg2 = 0; sg2 < 2; ++sg2) {
                double w = (sg1 ? -1.0 : 1.0) + x * (sg2 ? -1.0 : 1.0);
                for (int j = 0; j < n1; ++j)
                    for (int k = 0; k < n2; ++k) {
                        cplx uu = sg1 ? std::conj(f1.tail_u[j]) : f1.tail_u[j];
                        cplx vv = sg2 ? std::conj(f2.tail_u[k]) : f2.tail_u[k];
                        cplx coef = 0.25 * uu * vv * std::pow(x, -static_cast<double>(k));
                        cplx lambda = 2.0 * s - 2.0 - static_cast<double>(j + k);
                        tail += coef * oscillatory_tail(lambda, w, Y);
                    }
            }
        tail *= 2.0 / (PI * std::sqrt(x));
    }
    cplx total = head.value() + body + tail;
    // (4 pi)^{1-2s} * pi * x * integral
    return std::exp((1.0 - 2.0 * s) * std::log(2.0 * TWO_PI)) * PI * x * total;
}

// ---------------------------------------------------------------------------
// B kernels
// ---------------------------------------------------------------------------
cplx kernel_B_jk(int j, int k, cplx r, cplx u, cplx s, cplx nu, cplx rho, cplx mu,
                 double tol) {
    if (s.real() < 0.5 - 1e-9 || rho.real() >= 1.0 || rho.real() < 0.5 - 1e-9)
        throw std::domain_error("kernel_B: need 1/2 <= Re s, Re rho < 1");
    auto g = [&](double w) -> cplx {
        double xv = std::exp(w);
        KernelPoint p1{j, k, r, std::sqrt(xv), rho, nu};
        KernelPoint p2{0, k, u, 1.0 / std::sqrt(xv), 1.0 - rho, mu};
        return kernel_A_closed(p1) * kernel_A_closed(p2) * std::exp((rho - s) * w);
    };
    // The A00 factors carry |x - 1|^{1-2 Re rho} branch points at w = 0;
    // tanh-sinh absorbs those real-exponent endpoint singularities, adaptive
    // panels handle the oscillatory algebraic tails.
    double W = std::min(70.0, 2.0 * 46.0 / std::max(0.5, s.real()));
    cplx center = integrate_tanh_sinh(g, -2.0, 0.0, 0.2 * tol).value +
                  integrate_tanh_sinh(g, 0.0, 2.0, 0.2 * tol).value;
    cplx left = integrate_gl(g, -W, -2.0, tol, 1e-16, 15).value;
    cplx right = integrate_gl(g, 2.0, W, tol, 1e-16, 15).value;
    return center + left + right;
}

cplx kernel_B(int j, cplx r, cplx u, cplx s, cplx nu, cplx rho, cplx mu, double tol) {
    return kernel_B_jk(j, 0, r, u, s, nu, rho, mu, tol) +
           kernel_B_jk(j, 1, r, u, s, nu, rho, mu, tol);
}

cplx kernel_b_l(int j, int l, cplx r, cplx s, cplx nu, cplx rho, cplx mu) {
    return kernel_B(j, r, -cI() * (static_cast<double>(l) - 0.5), s, nu, rho, mu);
}

cplx kernel_B00_contour(cplx r, cplx u, cplx s, cplx nu, cplx rho, cplx mu) {
    // Mellin-Parseval assembly from the verified transform pairs
    //   M[A00(r, sqrt(.); rho, nu)](w) =
    //       (1/2)(4 pi)^{2-2 rho} gamma(rho-w-1/2, 1/2+ir) gamma(w+1/2, nu)
    //       sin(pi(w-rho)) sin(pi w),
    // which after w = v - 1/2 yields
    //   B00 = -4 pi^2 (1/2 pi i) int gamma(v,nu) gamma(rho-v, 1/2+ir)
    //         gamma(v+s-rho, mu) gamma(1-s-v, 1/2+iu)
    //         cos(pi v) cos(pi(rho-v)) cos(pi(s+v)) cos(pi(rho-s-v)) dv.
    double lo = std::max(0.0, (rho - s).real());
    double hi = std::min(rho.real(), 1.0 - s.real());
    if (lo >= hi) throw std::domain_error("kernel_B00_contour: empty contour strip");
    double Delta = 0.5 * (lo + hi);
    auto f = [&](double y) -> cplx {
        cplx v(Delta, y);
        cplx lg = log_gamma_factor(v, nu) +
                  log_gamma_factor(rho - v, 0.5 + cI() * r) +
                  log_gamma_factor(v + s - rho, mu) +
                  log_gamma_factor(1.0 - s - v, 0.5 + cI() * u) +
                  special::log_cos_pi(v) + special::log_cos_pi(rho - v) +
                  special::log_cos_pi(s + v) + special::log_cos_pi(rho - s - v);
        return std::exp(lg);
    };
    // the integrand decays only like -1/(4 y^2); integrate to Y and append the
    // fitted algebraic tail (odd /y^3 parts cancel between the two ends)
    const double Y = 60.0;
    auto q = integrate_gl(f, -Y, Y, 1e-10, 1e-18, 16);
    cplx tail = (f(Y) + f(-Y)) * Y;
    // dv = i dy; with the leading -4 pi^2 and 1/(2 pi i) this is -2 pi x integral
    return -TWO_PI * (q.value + tail);
}

} // namespace kuzver::kernels
