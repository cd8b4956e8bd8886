#include "kuzver/hyp2f1.hpp"
#include "kuzver/special.hpp"

namespace kuzver::special {

namespace {

constexpr int MAX_TERMS = 4000;
constexpr double SERIES_CUT = 0.66;

bool near_int(cplx v, long* out = nullptr, double tol = 1e-9) {
    double r = std::round(v.real());
    if (std::abs(v.real() - r) < tol && std::abs(v.imag()) < tol) {
        if (out) *out = std::lround(r);
        return true;
    }
    return false;
}

bool near_nonpos_int(cplx v, long* out = nullptr, double tol = 1e-9) {
    long m;
    if (near_int(v, &m, tol) && m <= 0) {
        if (out) *out = m;
        return true;
    }
    return false;
}

// plain double series; reports the cancellation ratio max|term| / |sum|
cplx series_double(cplx a, cplx b, cplx c, double z, double& cancel) {
    cplx t = 1.0, s = 1.0;
    double tmax = 1.0;
    for (int k = 0; k < MAX_TERMS; ++k) {
        t *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
             ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
        s += t;
        double m = std::abs(t);
        tmax = std::max(tmax, m);
        if (m < 1e-17 * std::abs(s) && k > 3) break;
    }
    cancel = tmax / std::max(std::abs(s), 1e-300);
    return s;
}

cplx series_dd(cplx a, cplx b, cplx c, double z) {
    ddc t(1.0), s(1.0);
    ddc za(a), zb(b), zc(c), zz(cplx(z, 0.0));
    for (int k = 0; k < MAX_TERMS; ++k) {
        ddc kk(cplx(static_cast<double>(k), 0.0));
        ddc k1(cplx(static_cast<double>(k + 1), 0.0));
        t = t * (za + kk) * (zb + kk) / ((zc + kk) * k1) * zz;
        s = s + t;
        if (ddc_abs(t) < 1e-33 * ddc_abs(s) && k > 3) break;
    }
    return s.to_cplx();
}

// terminating series for negative-integer first parameter (polynomial case)
cplx series_poly(cplx a, cplx b, cplx c, double z, long terms) {
    cplx t = 1.0, s = 1.0;
    for (long k = 0; k < terms; ++k) {
        t *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
             ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * z;
        s += t;
    }
    return s;
}

cplx series(cplx a, cplx b, cplx c, double z) {
    long ai, bi;
    if (near_nonpos_int(a, &ai)) return series_poly(a, b, c, z, -ai);
    if (near_nonpos_int(b, &bi)) return series_poly(b, a, c, z, -bi);
    double cancel;
    cplx s = series_double(a, b, c, z, cancel);
    if (cancel > 1e10) s = series_dd(a, b, c, z);
    return s;
}

cplx hyp2f1_impl(cplx a, cplx b, cplx c, double z, int depth);

// 1-z connection at integer c-a-b = m >= 0 (the logarithmic case); the
// caller guarantees c = a + b + m to rounding and 1-z in (0, 0.34].
cplx log_case_1mz(cplx a, cplx b, long m, double z) {
    double w = 1.0 - z;
    cplx c = a + b + static_cast<double>(m);
    cplx front = 0.0;
    if (m > 0) {
        cplx fac = std::exp(lgamma(cplx(static_cast<double>(m))) + lgamma(c) -
                            lgamma(a + static_cast<double>(m)) -
                            lgamma(b + static_cast<double>(m)));
        cplx t = 1.0;
        KahanSumC s;
        for (long k = 0; k < m; ++k) {
            s.add(t);
            t *= (a + static_cast<double>(k)) * (b + static_cast<double>(k)) /
                 ((static_cast<double>(k) + 1.0) * static_cast<double>(k + 1 - m)) * w;
        }
        front = fac * s.value();
    }
    double lw = std::log(w);
    cplx fac2 = -std::exp(lgamma(c) - lgamma(a) - lgamma(b)) *
                std::pow(w, static_cast<double>(m)) * (m % 2 == 0 ? 1.0 : -1.0);
    cplx am = a + static_cast<double>(m), bm = b + static_cast<double>(m);
    cplx t = std::exp(-std::lgamma(static_cast<double>(m) + 1.0));  // 1/m! at k = 0
    KahanSumC s2;
    cplx psi_a = digamma(am), psi_b = digamma(bm);
    double psi_k1 = -EULER_GAMMA;  // psi(1)
    double psi_km1 = -EULER_GAMMA;
    for (long j = 1; j <= m; ++j) psi_km1 += 1.0 / j;  // psi(m+1)
    for (int k = 0; k < MAX_TERMS; ++k) {
        cplx bracket = lw - psi_k1 - psi_km1 + psi_a + psi_b;
        cplx add = t * bracket;
        s2.add(add);
        if (std::abs(add) < 1e-17 * std::abs(s2.value()) && k > 3) break;
        t *= (am + static_cast<double>(k)) * (bm + static_cast<double>(k)) /
             ((static_cast<double>(k) + 1.0) * (static_cast<double>(k + m) + 1.0)) * w;
        psi_k1 += 1.0 / (k + 1.0);
        psi_km1 += 1.0 / (k + m + 1.0);
        psi_a += 1.0 / (am + static_cast<double>(k));
        psi_b += 1.0 / (bm + static_cast<double>(k));
    }
    return front + fac2 * s2.value();
}

// 1-z connection, c-a-b away from integers
cplx connect_1mz(cplx a, cplx b, cplx c, double z, int depth) {
    double w = 1.0 - z;
    cplx cab = c - a - b;
    cplx f1 = std::exp(lgamma(c) + lgamma(cab) - lgamma(c - a) - lgamma(c - b));
    cplx f2 = std::exp(lgamma(c) + lgamma(-cab) - lgamma(a) - lgamma(b));
    return f1 * hyp2f1_impl(a, b, 1.0 - cab, w, depth + 1) +
           f2 * std::pow(w, cab) * hyp2f1_impl(c - a, c - b, cab + 1.0, w, depth + 1);
}

// 1/z connection for very negative z, a-b away from integers
cplx connect_inv(cplx a, cplx b, cplx c, double z, int depth) {
    double iz = 1.0 / z;
    cplx f1 = std::exp(lgamma(c) + lgamma(b - a) - lgamma(b) - lgamma(c - a));
    cplx f2 = std::exp(lgamma(c) + lgamma(a - b) - lgamma(a) - lgamma(c - b));
    return f1 * std::pow(-z, -a) * hyp2f1_impl(a, a - c + 1.0, a - b + 1.0, iz, depth + 1) +
           f2 * std::pow(-z, -b) * hyp2f1_impl(b, b - c + 1.0, b - a + 1.0, iz, depth + 1);
}

cplx hyp2f1_impl(cplx a, cplx b, cplx c, double z, int depth) {
    if (depth > 4) throw std::runtime_error("hyp2f1: transformation recursion");
    long ci;
    if (near_nonpos_int(c, &ci)) {
        long ai, bi;
        bool terminates = (near_nonpos_int(a, &ai) && ai > ci) ||
                          (near_nonpos_int(b, &bi) && bi > ci);
        if (!terminates)
            throw std::domain_error("hyp2f1: c is a nonpositive integer (use hyp2f1_reg)");
    }
    if (z == 0.0) return 1.0;
    if (z >= 1.0) throw std::domain_error("hyp2f1: argument z >= 1 unsupported");
    if (std::abs(c - b) < 1e-14) return std::pow(1.0 - z, -a);
    if (std::abs(c - a) < 1e-14) return std::pow(1.0 - z, -b);

    if (std::abs(z) <= SERIES_CUT) return series(a, b, c, z);
    double zp = z / (z - 1.0);  // Pfaff argument, in (0,1) for z < 0
    if (z < 0.0 && std::abs(zp) <= SERIES_CUT)
        return std::pow(1.0 - z, -a) * series(a, c - b, c, zp);
    if (z < 0.0) {
        long d;
        if (!near_int(a - b, &d)) return connect_inv(a, b, c, z, depth);
        // integer a-b: symmetric nudge off the degenerate pencil; odd orders
        // cancel, leaving O(eps^2) plus ~1e-16/eps roundoff
        double eps = 3e-6;
        cplx v1 = connect_inv(a + eps, b, c, z, depth);
        cplx v2 = connect_inv(a - eps, b, c, z, depth);
        return 0.5 * (v1 + v2);
    }
    // 0.66 < z < 1
    long m;
    cplx cab = c - a - b;
    if (near_int(cab, &m)) {
        if (m >= 0) return log_case_1mz(a, b, m, z);
        // Euler flip sends c-a-b to its negative
        return std::pow(1.0 - z, cab) * log_case_1mz(c - a, c - b, -m, z);
    }
    if (std::abs(cab.imag()) < 0.05 &&
        std::abs(cab.real() - std::round(cab.real())) < 1e-5) {
        // close enough to the logarithmic case that the Gamma factors blow up:
        // average two nudged evaluations (error O(eps^2) by symmetry)
        double eps = 1e-5;
        cplx v1 = connect_1mz(a, b, c + eps, z, depth);
        cplx v2 = connect_1mz(a, b, c - eps, z, depth);
        return 0.5 * (v1 + v2);
    }
    return connect_1mz(a, b, c, z, depth);
}

} // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, double z) { return hyp2f1_impl(a, b, c, z, 0); }

cplx hyp2f1_series_probe(cplx a, cplx b, cplx c, double z) { return series(a, b, c, z); }

cplx hyp2f1_reg(cplx a, cplx b, cplx c, double z) {
    long ci;
    if (!near_nonpos_int(c, &ci)) return hyp2f1(a, b, c, z) / cgamma(c);
    // c = -M: terms k <= M die against the Gamma(c) pole; the series starts
    // at k = M+1 where Gamma(c+k) = Gamma(k-M) is finite.
    long M = -ci;
    if (std::abs(z) > SERIES_CUT)
        throw std::domain_error("hyp2f1_reg: nonpositive integer c needs |z| <= 0.66");
    long k0 = M + 1;
    cplx t = std::exp(lgamma(a + static_cast<double>(k0)) - lgamma(a) +
                      lgamma(b + static_cast<double>(k0)) - lgamma(b) -
                      std::lgamma(static_cast<double>(k0) + 1.0)) *
             std::pow(z, static_cast<double>(k0));
    KahanSumC s;
    s.add(t);
    for (int k = 0; k < MAX_TERMS; ++k) {
        double kk = static_cast<double>(k0 + k);
        t *= (a + kk) * (b + kk) / ((kk - static_cast<double>(M)) * (kk + 1.0)) * z;
        s.add(t);
        if (std::abs(t) < 1e-17 * std::abs(s.value()) && k > 3) break;
    }
    return s.value();
}

cplx hyp2f1_pencil_deriv(cplx a, cplx da, cplx b, cplx db, cplx c, cplx dc, double z) {
    if (std::abs(z) > 0.8)
        throw std::domain_error("hyp2f1_pencil_deriv: |z| > 0.8");
    cplx t = 1.0, sa = 0.0, sb = 0.0, sc = 0.0;
    KahanSumC acc;
    for (int k = 0; k < MAX_TERMS; ++k) {
        if (k > 0) {
            double km = static_cast<double>(k - 1);
            sa += 1.0 / (a + km);
            sb += 1.0 / (b + km);
            sc += 1.0 / (c + km);
            t *= (a + km) * (b + km) / ((c + km) * static_cast<double>(k)) * z;
        }
        cplx add = t * (da * sa + db * sb - dc * sc);
        acc.add(add);
        if (k > 6 && std::abs(t) < 1e-18 * std::max(1.0, std::abs(acc.value()))) break;
    }
    return acc.value();
}

} // namespace kuzver::special
