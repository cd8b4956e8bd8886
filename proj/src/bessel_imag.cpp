#include "kuzver/bessel_imag.hpp"
#include "kuzver/special.hpp"
#include "kuzver/quadrature.hpp"

#include <algorithm>

namespace kuzver::special {

namespace {

// log(sinh(pi r)) for r > 0 without overflow
double log_sinh_pi(double r) {
    double pr = PI * r;
    if (pr > 36.0) return pr - std::log(2.0);
    return std::log(std::sinh(pr));
}

// ---------------------------------------------------------------------------
// Series path.  J_{2ir}(x) = P * S with
//   P = exp(2ir log(x/2) - lgamma(1+2ir)),
//   S = sum (-q)^k / (k! (1+2ir)_k),  q = x^2/4,
// and the scaled kernels divide out sinh(pi r) in log space.
// sign = -1 gives the J family, +1 the I family (no alternating sign).
// ---------------------------------------------------------------------------
cplx imag_order_series_sum(double q, double r, double sign, cplx* deriv_sum) {
    cplx t = 1.0, s = 1.0, sd = 0.0;
    const cplx c0(1.0, 2.0 * r);
    for (int k = 1; k <= 400; ++k) {
        t *= sign * q / (static_cast<double>(k) * (c0 + static_cast<double>(k - 1.0)));
        s += t;
        sd += t * static_cast<double>(2 * k);
        if (std::abs(t) < 1e-18 * std::abs(s) && k > 3) break;
    }
    if (deriv_sum) *deriv_sum = sd;
    return s;
}

// k0i by series; also d/dx if dk is non-null.
double k0i_series(double x, double r, double* dk) {
    double q = 0.25 * x * x;
    cplx sd;
    cplx s = imag_order_series_sum(q, r, -1.0, dk ? &sd : nullptr);
    cplx lg = lgamma(cplx(1.0, 2.0 * r));
    cplx logpref = cplx(0.0, 2.0 * r * std::log(0.5 * x)) - lg - log_sinh_pi(r);
    cplx pref = std::exp(logpref);
    double val = -(pref * s).imag();
    if (dk) {
        // d/dx [P S] = P (2ir S + sum 2k t_k) / x
        cplx d = pref * (cplx(0.0, 2.0 * r) * s + sd) / x;
        *dk = -d.imag();
    }
    return val;
}

double kki_series(double x, double r, double* dk) {
    double q = 0.25 * x * x;
    cplx sd;
    cplx s = imag_order_series_sum(q, r, +1.0, dk ? &sd : nullptr);
    cplx lg = lgamma(cplx(1.0, 2.0 * r));
    cplx logpref = cplx(0.0, 2.0 * r * std::log(0.5 * x)) - lg - log_sinh_pi(r);
    cplx pref = std::exp(logpref);
    double val = -0.5 * PI * (pref * s).imag();
    if (dk) {
        cplx d = pref * (cplx(0.0, 2.0 * r) * s + sd) / x;
        *dk = -0.5 * PI * d.imag();
    }
    return val;
}

// ---------------------------------------------------------------------------
// Contour path for k0i, r small.
//   k0i(x, r) = (2/pi) [ -V + cosh(pi r) H ],
//   V = int_0^{pi/2} sin(x cos a) cosh(2 r a) da,
//   H = int_0^inf   e^{-x sinh u} cos(2 r u) du.
// Roundoff grows like eps * e^{pi r}, so this path is kept to r <= 6.5.
// ---------------------------------------------------------------------------
double k0i_contour(double x, double r, double* dk) {
    auto fV = [&](double a) -> cplx {
        return std::sin(x * std::cos(a)) * std::cosh(2.0 * r * a);
    };
    auto fH = [&](double u) -> cplx {
        return std::exp(-x * std::sinh(u)) * std::cos(2.0 * r * u);
    };
    double umax = std::asinh(50.0 / x) + 1.0;
    cplx V = integrate_gl(fV, 0.0, 0.5 * PI, 1e-15, 1e-300, 16).value;
    cplx H = integrate_gl(fH, 0.0, umax, 1e-15, 1e-300, 16).value;
    double val = (2.0 / PI) * (-V.real() + std::cosh(PI * r) * H.real());
    if (dk) {
        auto dV = [&](double a) -> cplx {
            return std::cos(a) * std::cos(x * std::cos(a)) * std::cosh(2.0 * r * a);
        };
        auto dH = [&](double u) -> cplx {
            return -std::sinh(u) * std::exp(-x * std::sinh(u)) * std::cos(2.0 * r * u);
        };
        cplx Vp = integrate_gl(dV, 0.0, 0.5 * PI, 1e-15, 1e-300, 16).value;
        cplx Hp = integrate_gl(dH, 0.0, umax, 1e-15, 1e-300, 16).value;
        *dk = (2.0 / PI) * (-Vp.real() + std::cosh(PI * r) * Hp.real());
    }
    return val;
}

// K integral representation: K_{2ir}(x) = int_0^inf e^{-x cosh t} cos(2rt) dt.
double kki_integral(double x, double r, double* dk) {
    double tmax = std::acosh((50.0 + x) / x) + 1.0;
    auto f = [&](double t) -> cplx {
        return std::exp(-x * std::cosh(t)) * std::cos(2.0 * r * t);
    };
    double K = integrate_gl(f, 0.0, tmax, 1e-15, 1e-300, 16).value.real();
    double ch = std::cosh(PI * r);
    if (dk) {
        auto g = [&](double t) -> cplx {
            return -std::cosh(t) * std::exp(-x * std::cosh(t)) * std::cos(2.0 * r * t);
        };
        *dk = ch * integrate_gl(g, 0.0, tmax, 1e-15, 1e-300, 16).value.real();
    }
    return ch * K;
}

// ---------------------------------------------------------------------------
// Dormand-Prince 5(4) for u'' = w(x) u written as a 2-state system.
// ---------------------------------------------------------------------------
struct State { double u, v; };

template <typename W>
void dopri5(const W& w, double& x, State& y, double x_end, double tol) {
    auto rhs = [&](double t, const State& s) -> State {
        return {s.v, w(t) * s.u};
    };
    double h = (x_end > x ? 1.0 : -1.0) * std::min(0.1, std::abs(x_end - x));
    int guard = 0;
    while ((x_end - x) * h > 0.0 && ++guard < 2000000) {
        if (std::abs(h) > std::abs(x_end - x)) h = x_end - x;
        State k1 = rhs(x, y);
        auto at = [&](double c, double a1, double a2, double a3, double a4, double a5,
                      const State& K1, const State& K2, const State& K3, const State& K4,
                      const State& K5) -> State {
            return {y.u + h * (a1 * K1.u + a2 * K2.u + a3 * K3.u + a4 * K4.u + a5 * K5.u),
                    y.v + h * (a1 * K1.v + a2 * K2.v + a3 * K3.v + a4 * K4.v + a5 * K5.v)};
        };
        State z = {y.u + h * 0.2 * k1.u, y.v + h * 0.2 * k1.v};
        State k2 = rhs(x + 0.2 * h, z);
        z = at(0, 3.0 / 40, 9.0 / 40, 0, 0, 0, k1, k2, k1, k1, k1);
        State k3 = rhs(x + 0.3 * h, z);
        z = at(0, 44.0 / 45, -56.0 / 15, 32.0 / 9, 0, 0, k1, k2, k3, k1, k1);
        State k4 = rhs(x + 0.8 * h, z);
        z = at(0, 19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729, 0,
               k1, k2, k3, k4, k1);
        State k5 = rhs(x + 8.0 / 9.0 * h, z);
        z = at(0, 9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656,
               k1, k2, k3, k4, k5);
        State k6 = rhs(x + h, z);
        // 5th order solution
        State y5 = {y.u + h * (35.0 / 384 * k1.u + 500.0 / 1113 * k3.u + 125.0 / 192 * k4.u
                               - 2187.0 / 6784 * k5.u + 11.0 / 84 * k6.u),
                    y.v + h * (35.0 / 384 * k1.v + 500.0 / 1113 * k3.v + 125.0 / 192 * k4.v
                               - 2187.0 / 6784 * k5.v + 11.0 / 84 * k6.v)};
        State k7 = rhs(x + h, y5);
        // embedded 4th order
        State y4 = {y.u + h * (5179.0 / 57600 * k1.u + 7571.0 / 16695 * k3.u + 393.0 / 640 * k4.u
                               - 92097.0 / 339200 * k5.u + 187.0 / 2100 * k6.u + 1.0 / 40 * k7.u),
                    y.v + h * (5179.0 / 57600 * k1.v + 7571.0 / 16695 * k3.v + 393.0 / 640 * k4.v
                               - 92097.0 / 339200 * k5.v + 187.0 / 2100 * k6.v + 1.0 / 40 * k7.v)};
        double scale = std::max({1.0, std::abs(y5.u), std::abs(y5.v)});
        double err = std::max(std::abs(y5.u - y4.u), std::abs(y5.v - y4.v)) / scale;
        if (err <= tol) {
            x += h;
            y = y5;
        }
        double fac = 0.9 * std::pow(tol / std::max(err, 1e-300), 0.2);
        h *= std::clamp(fac, 0.2, 5.0);
    }
}

double series_xmax(double r) { return std::sqrt(112.0 * std::max(r, 1.0)); }

} // namespace

// ---------------------------------------------------------------------------
// k0i
// ---------------------------------------------------------------------------
double k0i(double x, double r) {
    if (x <= 0.0) throw std::invalid_argument("k0i: x <= 0");
    r = std::abs(r);
    if (r < 1e-6) return -bessel_y0(x);
    if (x <= series_xmax(r)) return k0i_series(x, r, nullptr);
    // ODE continuation seeded by the series
    double x0 = 0.98 * series_xmax(r);
    double dk;
    double k = k0i_series(x0, r, &dk);
    State y{std::sqrt(x0) * k, 0.5 * k / std::sqrt(x0) + std::sqrt(x0) * dk};
    double g2 = (16.0 * r * r + 1.0) * 0.25;
    auto w = [g2](double t) { return -(1.0 + g2 / (t * t)); };
    double xc = x0;
    dopri5(w, xc, y, x, 1e-13);
    return y.u / std::sqrt(x);
}

std::vector<double> k0i_sweep(double r, const std::vector<double>& xs) {
    r = std::abs(r);
    std::vector<double> out(xs.size());
    if (r < 1e-6) {
        for (size_t i = 0; i < xs.size(); ++i) out[i] = -bessel_y0(xs[i]);
        return out;
    }
    double xser = series_xmax(r);
    size_t i = 0;
    for (; i < xs.size() && xs[i] <= xser; ++i) out[i] = k0i_series(xs[i], r, nullptr);
    if (i == xs.size()) return out;
    double x0 = 0.98 * xser;
    double dk;
    double k = k0i_series(x0, r, &dk);
    State y{std::sqrt(x0) * k, 0.5 * k / std::sqrt(x0) + std::sqrt(x0) * dk};
    double g2 = (16.0 * r * r + 1.0) * 0.25;
    auto w = [g2](double t) { return -(1.0 + g2 / (t * t)); };
    double xc = x0;
    for (; i < xs.size(); ++i) {
        dopri5(w, xc, y, xs[i], 1e-13);
        out[i] = y.u / std::sqrt(xs[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// kki
// ---------------------------------------------------------------------------
double kki(double x, double r) {
    if (x <= 0.0) throw std::invalid_argument("kki: x <= 0");
    r = std::abs(r);
    if (r < 1e-6) return bessel_k0(x);
    if (x <= series_xmax(r)) return kki_series(x, r, nullptr);
    // integral representation when its cancellation stays acceptable
    double tp = 2.0 * r;
    double cancel;
    if (x >= tp) {
        double S = std::sqrt(x * x - tp * tp) - tp * std::acos(tp / x);
        cancel = PI * r - (x - S);  // log(K0/|K_{2ir}|), <= 0 means benign
    } else {
        cancel = PI * r;  // oscillatory zone: worst case
    }
    if (cancel < 25.0) return kki_integral(x, r, nullptr);
    if (x <= tp + 9.0) {
        // outward ODE from the series seed; mild dominant-solution drift only
        double x0 = 0.98 * series_xmax(r);
        double dk;
        double k = kki_series(x0, r, &dk);
        State y{std::sqrt(x0) * k, 0.5 * k / std::sqrt(x0) + std::sqrt(x0) * dk};
        double g2 = (16.0 * r * r + 1.0) * 0.25;
        auto w = [g2](double t) { return 1.0 - g2 / (t * t); };
        double xc = x0;
        dopri5(w, xc, y, x, 1e-13);
        return y.u / std::sqrt(x);
    }
    throw std::invalid_argument("kki: (x, r) outside certified window");
}

std::vector<double> kki_sweep(double r, const std::vector<double>& xs) {
    std::vector<double> out(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) out[i] = kki(xs[i], std::abs(r));
    return out;
}

// ---------------------------------------------------------------------------
// J_{2iu}(x) via rotated Mehler-Sonine contours
// ---------------------------------------------------------------------------
static void j_imag_contour(double u, double x, cplx& J, cplx& dJ) {
    // H(rho) = int_0^inf e^{i x cosh t} e^{i rho t} dt rotated upward:
    //   = i int_0^{pi/2} e^{i x cos a} e^{-rho a} da
    //     + e^{-rho pi/2} int_0^inf e^{-x sinh v} e^{i rho v} dv
    auto Hrot = [&](double rho, bool deriv) -> cplx {
        auto f1 = [&](double a) -> cplx {
            cplx ph = std::exp(cplx(0.0, x * std::cos(a)) - rho * a);
            return deriv ? ph * cplx(0.0, std::cos(a)) : ph;
        };
        auto f2 = [&](double v) -> cplx {
            cplx ph = std::exp(cplx(-x * std::sinh(v), rho * v));
            return deriv ? ph * (-std::sinh(v)) : ph;
        };
        double vmax = std::asinh(50.0 / x) + 1.0;
        cplx p1 = integrate_gl(f1, 0.0, 0.5 * PI, 1e-14, 1e-300, 18).value;
        cplx p2 = integrate_gl(f2, 0.0, vmax, 1e-14, 1e-300, 16).value;
        return cI() * p1 + std::exp(-rho * 0.5 * PI) * p2;
    };
    double rho = 2.0 * u;
    cplx Hp = Hrot(rho, false), Hm = Hrot(-rho, false);
    cplx H = 0.5 * (Hp + Hm);
    cplx dHp = Hrot(rho, true), dHm = Hrot(-rho, true);
    cplx dH = 0.5 * (dHp + dHm);
    J = (2.0 / PI) * (std::cosh(PI * u) * H.imag() - cI() * std::sinh(PI * u) * H.real());
    dJ = (2.0 / PI) * (std::cosh(PI * u) * dH.imag() - cI() * std::sinh(PI * u) * dH.real());
}

void j_imag_order(double u, double x, cplx& J, cplx& dJ) {
    if (x <= 0.0) throw std::invalid_argument("j_imag_order: x <= 0");
    if (std::abs(u) > 4.5)
        throw std::invalid_argument("j_imag_order: |u| > 4.5 outside certified window");
    if (x > 500.0) throw std::invalid_argument("j_imag_order: x > 500");
    if (x * x <= 112.0 * std::max(std::abs(u), 1.0) && std::abs(u) > 1e-8) {
        j_imag_order_series_probe(u, x, J, dJ);
        return;
    }
    j_imag_contour(u, x, J, dJ);
}

// --- test probes -----------------------------------------------------------
double k0i_series_probe(double x, double r) { return k0i_series(x, r, nullptr); }
double k0i_contour_probe(double x, double r) { return k0i_contour(x, r, nullptr); }
double kki_integral_probe(double x, double r) { return kki_integral(x, r, nullptr); }
void j_imag_order_series_probe(double u, double x, cplx& J, cplx& dJ) {
    double q = 0.25 * x * x;
    cplx sd;
    cplx s = imag_order_series_sum(q, u, -1.0, &sd);
    cplx pref = std::exp(cplx(0.0, 2.0 * u * std::log(0.5 * x)) - lgamma(cplx(1.0, 2.0 * u)));
    J = pref * s;
    dJ = pref * (cplx(0.0, 2.0 * u) * s + sd) / x;
}

void j_imag_order_contour_probe(double u, double x, cplx& J, cplx& dJ) {
    j_imag_contour(u, x, J, dJ);
}

// --- public dispatcher -----------------------------------------------------
cplx bessel(BesselKind kind, cplx order, double x) {
    bool real_order = std::abs(order.imag()) < 1e-12;
    bool imag_order = std::abs(order.real()) < 1e-12;
    switch (kind) {
        case BesselKind::J:
            if (real_order) return cplx(bessel_j(order.real(), x));
            if (imag_order) {
                cplx J, dJ;
                j_imag_order(0.5 * order.imag(), x, J, dJ);
                return J;
            }
            throw std::invalid_argument("bessel: J supports only real or purely imaginary order");
        case BesselKind::Y:
            if (real_order) return cplx(bessel_y(order.real(), x));
            throw std::invalid_argument("bessel: Y supports real orders only");
        case BesselKind::I:
            if (real_order) {
                double nu = order.real();
                if (nu == 0.0) return cplx(bessel_i0(x));
                if (nu == 1.0) return cplx(bessel_i1(x));
                if (x <= 30.0) {
                    // plain series, no cancellation
                    double lg = std::lgamma(nu + 1.0);
                    double t = std::exp(nu * std::log(0.5 * x) - lg), q = 0.25 * x * x;
                    KahanSum s;
                    s.add(t);
                    for (int k = 1; k <= 300; ++k) {
                        t *= q / (k * (nu + k));
                        s.add(t);
                        if (t < 1e-18 * s.value()) break;
                    }
                    return cplx(s.value());
                }
                throw std::invalid_argument("bessel: I with non 0/1 order needs x <= 30");
            }
            throw std::invalid_argument("bessel: I supports real orders only");
        case BesselKind::K:
            if (imag_order && std::abs(order.imag()) > 1e-12) {
                double r = 0.5 * order.imag();
                return cplx(kki(x, std::abs(r)) / std::cosh(PI * r));
            }
            return bessel_k_complex_order(order, x);
    }
    throw std::logic_error("bessel: unreachable");
}

} // namespace kuzver::special
