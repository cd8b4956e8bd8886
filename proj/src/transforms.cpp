#include "kuzver/transforms.hpp"
#include "kuzver/special.hpp"
#include "kuzver/bessel_imag.hpp"
#include "kuzver/quadrature.hpp"

namespace kuzver::transforms {

using special::k0i;
using special::k0i_sweep;
using special::kki;
using special::lgamma;
using special::cgamma;
using special::log_cos_pi;
using special::bessel_j;
using special::bessel_j_ladder;

double chi_weight(double u) { return (2.0 / PI) * u * std::tanh(PI * u); }

double TestFunction::r_max(double rel_tol) const {
    double peak = 0.0;
    for (double r = 0.0; r <= 400.0; r += 0.25) peak = std::max(peak, std::abs(eval(cplx(r))));
    double bound = rel_tol * peak;
    for (double r = 400.0; r >= 0.25; r -= 0.25) {
        if (std::abs(eval(cplx(r))) * (r * r + 1.0) > bound) return r + 0.25;
    }
    return 1.0;
}

TestFunction make_gaussian_h(double A) {
    TestFunction h;
    h.eval = [A](cplx r) -> cplx {
        return (r * r + 0.25) * (r * r + 2.25) * std::exp(-(r * r) / (A * A));
    };
    h.strip_halfwidth = 3.0;
    h.decay_scale = A;
    h.enforced_zeros = {1, 2};
    return h;
}

TestFunction make_spike_h(double r0, double width) {
    TestFunction h;
    h.eval = [r0, width](cplx r) -> cplx {
        cplx a = (r - r0) / width, b = (r + r0) / width;
        return std::exp(-a * a) + std::exp(-b * b);
    };
    h.strip_halfwidth = 1.0;
    h.decay_scale = width;
    h.enforced_zeros = {};
    return h;
}

// ---------------------------------------------------------------------------
// chi-measure quadrature: fixed 16-point panels over [0, rmax]
// ---------------------------------------------------------------------------
namespace {
struct ChiNodes {
    std::vector<double> r, w;  // w includes the chi weight and the evenness factor 2
};

ChiNodes chi_nodes(const TestFunction& h, double panel = 0.5) {
    double rmax = h.r_max();
    ChiNodes out;
    const GLRule& rule = gl_rule(16);
    int npanels = static_cast<int>(std::ceil(rmax / panel));
    for (int p = 0; p < npanels; ++p) {
        double a = p * panel, b = std::min(rmax, a + panel);
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 16; ++i) {
            double r = mid + half * rule.x[i];
            out.r.push_back(r);
            out.w.push_back(2.0 * half * rule.w[i] * chi_weight(r));
        }
    }
    return out;
}
} // namespace

cplx chi_integral(const TestFunction& h, const std::function<cplx(double)>& f,
                  double) {
    ChiNodes n = chi_nodes(h);
    KahanSumC s;
    for (size_t i = 0; i < n.r.size(); ++i)
        s.add(n.w[i] * h(cplx(n.r[i])) * f(n.r[i]));
    return s.value();
}

double chi_moment(const TestFunction& h, int m) {
    ChiNodes n = chi_nodes(h);
    KahanSum s;
    for (size_t i = 0; i < n.r.size(); ++i)
        s.add(n.w[i] * h(cplx(n.r[i])).real() * std::pow(n.r[i], 2.0 * m));
    return s.value();
}

// ---------------------------------------------------------------------------
// phi and friends
// ---------------------------------------------------------------------------
double phi_from_h(const TestFunction& h, double x) {
    std::vector<double> xs{x};
    return phi_grid(h, xs)[0];
}

std::vector<double> phi_grid(const TestFunction& h, const std::vector<double>& xs) {
    // k0i oscillates in r at rate ~ 2 log(x/2) for small x; shrink the panels
    // accordingly
    double xmax = 1.0, xmin = 1.0;
    for (double x : xs) {
        xmax = std::max(xmax, x);
        xmin = std::min(xmin, x);
    }
    double rate = std::max(std::abs(std::log(0.5 * xmax)), std::abs(std::log(0.5 * xmin)));
    double panel = std::clamp(8.0 / (rate + 4.0), 0.2, 0.75);
    ChiNodes n = chi_nodes(h, panel);
    std::vector<size_t> idx(xs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return xs[a] < xs[b]; });
    std::vector<double> sorted;
    sorted.reserve(xs.size());
    for (size_t i : idx) sorted.push_back(xs[i]);

    std::vector<KahanSum> acc(xs.size());
    for (size_t j = 0; j < n.r.size(); ++j) {
        double hw = n.w[j] * h(cplx(n.r[j])).real();
        auto kv = k0i_sweep(n.r[j], sorted);
        for (size_t i = 0; i < sorted.size(); ++i) acc[i].add(hw * kv[i]);
    }
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < idx.size(); ++i) out[idx[i]] = acc[i].value();
    return out;
}

double h_from_phi(const RealFunction& phi, double r) {
    auto f = [&](double x) -> cplx { return k0i(x, r) * phi.f(x) / x; };
    cplx head = integrate_gl(f, 1e-9, 1.0, 1e-11, 1e-14, 12).value;
    cplx body = integrate_gl(f, 1.0, phi.x_max, 1e-11, 1e-14, 18).value;
    return PI * (head + body).real();
}

double g_from_phi(const RealFunction& phi, int k) {
    int order = 2 * k - 1;
    auto f = [&](double x) -> cplx { return bessel_j(order, x) * phi.f(x) / x; };
    cplx head = integrate_gl(f, 1e-9, 1.0, 1e-12, 1e-15, 12).value;
    cplx body = integrate_gl(f, 1.0, phi.x_max, 1e-11, 1e-14, 18).value;
    return order * (head + body).real();
}

double kl_forward(const RealFunction& psi, double r) {
    // 2 cosh(pi r) int K_{2ir}(x) psi(x) dx/x, the cosh absorbed into kki
    auto f = [&](double x) -> cplx { return kki(x, r) * psi.f(x) / x; };
    cplx v = integrate_gl(f, 1e-7, psi.x_max, 1e-12, 1e-15, 18).value;
    return 2.0 * v.real();
}

double kl_inverse(const std::function<double(double)>& h, double r_max, double x) {
    // (4/pi^2) int_R K_{2ir}(x) h(r) r sinh(pi r) dr
    //   = (8/pi^2) int_0^inf kki(x, r) h(r) r tanh(pi r) dr
    auto f = [&](double r) -> cplx { return kki(x, r) * h(r) * r * std::tanh(PI * r); };
    cplx v = integrate_gl(f, 0.0, r_max, 1e-12, 1e-15, 16).value;
    return 8.0 / (PI * PI) * v.real();
}

// ---------------------------------------------------------------------------
// regularization
// ---------------------------------------------------------------------------
RegularizedKernel reg_coeffs(const TestFunction& h, const std::vector<int>& L) {
    int N = static_cast<int>(L.size());
    if (N < 1) throw std::invalid_argument("reg_coeffs: empty index set");
    std::vector<double> z(N);
    double zmax = 0.0;
    for (int i = 0; i < N; ++i) {
        z[i] = (L[i] - 0.5) * (L[i] - 0.5);
        zmax = std::max(zmax, z[i]);
    }
    std::vector<std::vector<double>> Vm(N, std::vector<double>(N));
    std::vector<double> rhs(N);
    for (int m = 0; m < N; ++m) {
        for (int i = 0; i < N; ++i) Vm[m][i] = std::pow(z[i] / zmax, m);
        double mom = chi_moment(h, m);
        rhs[m] = ((m % 2 == 0) ? 1.0 : -1.0) * mom / std::pow(zmax, m);
    }
    double cond = 0.0;
    std::vector<double> chat = solve_full_pivot(Vm, rhs, &cond);
    if (cond > 1e12) throw std::runtime_error("reg_coeffs: system ill-conditioned");
    RegularizedKernel K;
    K.h = h;
    K.L = L;
    K.c.resize(N);
    for (int i = 0; i < N; ++i)
        K.c[i] = ((L[i] % 2 == 0) ? 1.0 : -1.0) * chat[i];  // c(l) from (-1)^l c(l)
    return K;
}

double phi_reg(const RegularizedKernel& K, double x) {
    double v = phi_from_h(K.h, x);
    int lmax = 0;
    for (int l : K.L) lmax = std::max(lmax, l);
    auto lad = bessel_j_ladder(2 * lmax - 1, x);
    for (size_t i = 0; i < K.L.size(); ++i) v -= K.c[i] * lad[2 * K.L[i] - 1];
    return v;
}

// ---------------------------------------------------------------------------
// Mellin transform and Barnes expansion
// ---------------------------------------------------------------------------
namespace {
// gamma(w, 1/2 + iu) cos(pi w) assembled in log space
cplx gamma_pair_cos(cplx w, double u) {
    return std::exp(lgamma(w + cplx(0.0, u)) + lgamma(w - cplx(0.0, u)) +
                    (2.0 * w - 1.0) * std::log(2.0) - std::log(PI) + log_cos_pi(w));
}
} // namespace

cplx mellin_phi_hat(const TestFunction& h, cplx w, const RegularizedKernel* K) {
    if (w.real() <= -1.0)
        throw std::domain_error("mellin_phi_hat: Re w <= -1 not implemented");
    if (std::abs(w + 0.5) < 1e-9)
        throw std::domain_error("mellin_phi_hat: w at the -1/2 pole");
    cplx val = chi_integral(h, [&](double u) { return gamma_pair_cos(w, u); });
    if (w.real() <= 0.0) {
        // continuation term: -(1/pi) 2^{2w+2} w sin(pi w) Gamma(2w) h(iw)
        cplx corr = -(1.0 / PI) * std::pow(2.0, 2.0 * w + 2.0) * w * std::sin(PI * w) *
                    cgamma(2.0 * w) * h(cI() * w);
        val += corr;
    }
    if (K) {
        for (size_t i = 0; i < K->L.size(); ++i) {
            int l = K->L[i];
            double sgn = (l % 2 == 0) ? 1.0 : -1.0;
            cplx g = std::exp(lgamma(w + (l - 0.5)) + lgamma(w - (l - 0.5)) +
                              (2.0 * w - 1.0) * std::log(2.0) - std::log(PI) +
                              log_cos_pi(w));
            val -= sgn * K->c[i] * g;
        }
    }
    return val;
}

cplx barnes_p(int k, cplx z) {
    cplx z2 = z * z;
    switch (k) {
        case 1: return z2 + 1.0 / 6.0;
        case 2: return 0.5 * z2 * z2 + (2.0 / 3.0) * z2 + 1.0 / 72.0;
        // from exp(Q(w,z)+Q(w,-z)); cross-checked against Stirling's series
        case 3: return z2 * z2 * z2 / 6.0 + 0.75 * z2 * z2 + (19.0 / 72.0) * z2 -
                       31.0 / 6480.0;
        default: throw std::invalid_argument("barnes_p: k must be 1..3");
    }
}

cplx barnes_estimate(const TestFunction& h, cplx w, int M) {
    if (M < 0 || M > 3) throw std::invalid_argument("barnes_estimate: M in 0..3");
    cplx integral = chi_integral(h, [&](double u) -> cplx {
        cplx z(0.0, u), acc = 1.0;
        for (int k = 1; k <= M; ++k) acc += barnes_p(k, z) / std::pow(w, k);
        return acc;
    });
    cplx pref = std::exp(2.0 * w * std::log(2.0) + log_cos_pi(w) +
                         (2.0 * w - 1.0) * std::log(w) - 2.0 * w);
    return pref * integral;
}

// phi(x) ~ sqrt(2/(pi x)) Re[ U(x) e^{ix} ] for large x; U is assembled by
// integrating the kernel's Hankel coefficient series against h dchi.
namespace {
std::vector<cplx> hankel_u_k0i(double r, int nterms) {
    // k0i(y,r) = sqrt(2/(pi y)) Re[ i (P+iQ) e^{-i pi/4} e^{iy} ]
    std::vector<cplx> u(nterms, 0.0);
    double mu = -16.0 * r * r, ak = 1.0;
    for (int k = 0; k < nterms; ++k) {
        u[k] = std::pow(cI(), static_cast<double>(k)) * ak;
        double odd = 2.0 * k + 1.0;
        ak *= (mu - odd * odd) / (8.0 * (k + 1.0));
    }
    cplx rot = cI() * std::exp(cplx(0.0, -0.25 * PI));
    for (auto& v : u) v *= rot;
    return u;
}

struct PhiTail {
    std::vector<cplx> u;
    double x_min;
};

PhiTail phi_tail(const TestFunction& h, int nterms = 6) {
    ChiNodes n = chi_nodes(h);
    PhiTail t;
    t.u.assign(nterms, 0.0);
    // weighted r where the mass sits controls the validity threshold
    double mass = 0.0, r90 = 1.0;
    std::vector<double> cum(n.r.size());
    for (size_t j = 0; j < n.r.size(); ++j) {
        double hw = std::abs(n.w[j] * h(cplx(n.r[j])).real());
        mass += hw;
        cum[j] = mass;
    }
    for (size_t j = 0; j < n.r.size(); ++j) {
        double hw = n.w[j] * h(cplx(n.r[j])).real();
        auto uj = hankel_u_k0i(n.r[j], nterms);
        for (int k = 0; k < nterms; ++k) t.u[k] += hw * uj[k];
        if (cum[j] < 0.995 * mass) r90 = std::max(r90, n.r[j]);
    }
    t.x_min = std::max(40.0, 3.0 * (2.0 * r90) * (2.0 * r90));
    return t;
}
} // namespace

cplx mellin_phi_direct(const TestFunction& h, cplx w) {
    PhiTail tail = phi_tail(h);
    double X = tail.x_min;
    // body: int_0^X phi(x) x^{2w-1} dx in the log variable
    double t_lo = std::log(1e-5), t_hi = std::log(X);
    const GLRule& rule = gl_rule(16);
    int npanels = static_cast<int>(std::ceil((t_hi - t_lo) / 0.35));
    std::vector<double> xs;
    std::vector<cplx> wts;
    for (int p = 0; p < npanels; ++p) {
        double a = t_lo + p * (t_hi - t_lo) / npanels;
        double b = t_lo + (p + 1) * (t_hi - t_lo) / npanels;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 16; ++i) {
            double tt = mid + half * rule.x[i];
            xs.push_back(std::exp(tt));
            wts.push_back(half * rule.w[i] * std::exp(2.0 * w * tt));
        }
    }
    auto pv = phi_grid(h, xs);
    KahanSumC body;
    for (size_t i = 0; i < xs.size(); ++i) body.add(wts[i] * pv[i]);
    // tail: sqrt(2/pi) sum_j (1/2)[u_j T(2w-3/2-j, +1) + conj(u_j) T(..., -1)]
    KahanSumC tl;
    for (size_t j = 0; j < tail.u.size(); ++j) {
        cplx lam = 2.0 * w - 1.5 - static_cast<double>(j);
        tl.add(0.5 * tail.u[j] * oscillatory_tail(lam, 1.0, X));
        tl.add(0.5 * std::conj(tail.u[j]) * oscillatory_tail(lam, -1.0, X));
    }
    return body.value() + std::sqrt(2.0 / PI) * tl.value();
}

double decay_probe(const RegularizedKernel& K, double re_w,
                   const std::vector<double>& im_w_grid) {
    std::vector<double> lw, lv;
    for (double t : im_w_grid) {
        cplx w(re_w, t);
        lw.push_back(std::log(std::abs(w)));
        lv.push_back(std::log(std::abs(mellin_phi_hat(K.h, w, &K))));
    }
    return fit_slope(lw, lv);
}

// ---------------------------------------------------------------------------
// contour coefficients
// ---------------------------------------------------------------------------
namespace {
cplx log_gf(cplx u, cplx v) {
    return (2.0 * u - 1.0) * std::log(2.0) - std::log(PI) +
           lgamma(u + v - 0.5) + lgamma(u - v + 0.5);
}
} // namespace

cplx coeff_h0(double r, const CoeffParams& p, const RegularizedKernel& K) {
    auto f = [&](double y) -> cplx {
        cplx w(p.contour_delta, y);
        cplx lg = log_gf(w, 0.5 + cI() * r) + log_gf(p.rho - w, p.nu) +
                  log_gf(p.s - w, p.mu) + log_cos_pi(w);
        cplx trig = std::cos(PI * (p.rho - w)) * std::cos(PI * (p.s - w)) +
                    std::sin(PI * p.nu) * std::sin(PI * p.mu);
        cplx phat = mellin_phi_hat(K.h, w - p.s - p.rho + 1.0, &K);
        return std::exp(lg) * trig * phat;
    };
    auto q = integrate_gl(f, -30.0, 30.0, 1e-9, 1e-16, 13);
    return q.value;  // -i int (...) dw over Re w = Delta, dw = i dy
}

cplx coeff_h1(double r, const CoeffParams& p, const RegularizedKernel& K) {
    auto f = [&](double y) -> cplx {
        cplx w(p.contour_delta, y);
        cplx lg = log_gf(w, 0.5 + cI() * r) + log_gf(p.rho - w, p.nu) +
                  log_gf(p.s - w, p.mu);
        cplx trig = std::cos(PI * (p.s - w)) * std::sin(PI * p.nu) +
                    std::cos(PI * (p.rho - w)) * std::sin(PI * p.mu);
        cplx phat = mellin_phi_hat(K.h, w - p.s - p.rho + 1.0, &K);
        return std::exp(lg) * std::cosh(PI * r) * trig * phat;
    };
    auto q = integrate_gl(f, -30.0, 30.0, 1e-9, 1e-16, 13);
    return q.value;
}

cplx coeff_g(int k, const CoeffParams& p, const RegularizedKernel& K) {
    auto f = [&](double y) -> cplx {
        cplx w(p.contour_delta, y);
        cplx lg = lgamma(k - 0.5 + w) - lgamma(k + 0.5 - w) +
                  (2.0 * w - 1.0) * std::log(2.0) +
                  log_gf(p.rho - w, p.nu) + log_gf(p.s - w, p.mu);
        cplx trig = std::cos(PI * (p.rho - w)) * std::cos(PI * (p.s - w)) +
                    std::sin(PI * p.nu) * std::sin(PI * p.mu);
        cplx phat = mellin_phi_hat(K.h, w - p.s - p.rho + 1.0, &K);
        return std::exp(lg) * trig * phat;
    };
    auto q = integrate_gl(f, -40.0, 40.0, 1e-9, 1e-16, 13);
    // (2(2k-1)/(pi i)) int (...) dw = (2(2k-1)/pi) int (...) dy
    return 2.0 * (2.0 * k - 1.0) / PI * q.value;
}

} // namespace kuzver::transforms
