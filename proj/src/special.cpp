#include "kuzver/special.hpp"
#include "kuzver/quadrature.hpp"

#include <array>

namespace kuzver::special {

// ---------------------------------------------------------------------------
// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficients).
// Relative error ~1e-15 over the right half plane.
// ---------------------------------------------------------------------------
namespace {
constexpr double LANCZOS_G = 4.7421875;  // 607/128
constexpr std::array<double, 15> LANCZOS_C = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

bool near_nonpositive_integer(cplx z, double tol = 1e-13) {
    if (z.real() > 0.5) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < tol && std::abs(z.imag()) < tol;
}

cplx lgamma_core(cplx z) {
    // Re z >= 0.5 assumed.
    cplx zm1 = z - 1.0;
    cplx sum = LANCZOS_C[0];
    for (int k = 1; k < 15; ++k) sum += LANCZOS_C[k] / (zm1 + static_cast<double>(k));
    cplx t = zm1 + LANCZOS_G + 0.5;
    return 0.5 * std::log(TWO_PI) + (zm1 + 0.5) * std::log(t) - t + std::log(sum);
}
} // namespace

// log sin(pi z), stable for large |Im z|; exp of the result is sin(pi z).
cplx log_sin_pi(cplx z) {
    double y = z.imag();
    if (std::abs(y) < 18.0) return std::log(std::sin(PI * z));
    cplx ipz = cplx(0.0, PI) * z;
    if (y > 0)  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        return cplx(-std::log(2.0), 0.5 * PI) - ipz + std::log(1.0 - std::exp(2.0 * ipz));
    // sin(pi z) = (1/(2i)) e^{i pi z} (1 - e^{-2 i pi z})
    return cplx(-std::log(2.0), -0.5 * PI) + ipz + std::log(1.0 - std::exp(-2.0 * ipz));
}

cplx lgamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw std::domain_error("lgamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return lgamma_core(z);
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(PI) - log_sin_pi(z) - lgamma_core(1.0 - z);
}

cplx cgamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw std::domain_error("cgamma: pole at nonpositive integer");
    if (z.real() >= 0.5) {
        cplx zm1 = z - 1.0;
        cplx sum = LANCZOS_C[0];
        for (int k = 1; k < 15; ++k) sum += LANCZOS_C[k] / (zm1 + static_cast<double>(k));
        cplx t = zm1 + LANCZOS_G + 0.5;
        return std::sqrt(TWO_PI) * std::pow(t, zm1 + 0.5) * std::exp(-t) * sum;
    }
    return PI / (std::sin(PI * z) * cgamma(1.0 - z));
}

cplx gamma_ratio(cplx a, cplx b) { return std::exp(lgamma(a) - lgamma(b)); }

cplx digamma(cplx z) {
    if (near_nonpositive_integer(z))
        throw std::domain_error("digamma: pole at nonpositive integer");
    if (z.real() < 0.5)
        return digamma(1.0 - z) - PI / std::tan(PI * z);
    cplx acc = 0.0;
    while (z.real() < 12.0) { acc -= 1.0 / z; z += 1.0; }
    // asymptotic series
    cplx inv = 1.0 / z, inv2 = inv * inv;
    cplx s = std::log(z) - 0.5 * inv;
    cplx p = inv2;
    static const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30,
                               5.0 / 66, -691.0 / 2730, 7.0 / 6};
    for (int k = 0; k < 7; ++k) {
        s -= B[k] / (2.0 * (k + 1)) * p;
        p *= inv2;
    }
    return s + acc;
}

// ---------------------------------------------------------------------------
// Bernoulli numbers / polynomials
// ---------------------------------------------------------------------------
double bernoulli_number(int n) {
    static std::vector<double> table;
    if (n < 0) throw std::invalid_argument("bernoulli_number: n < 0");
    if (table.empty()) {
        // B_m via the Akiyama-Tanigawa style recurrence on exact doubles:
        // B_m = -sum_{k=0}^{m-1} C(m,k) B_k / (m - k + 1).
        const int N = 62;
        table.resize(N + 1, 0.0);
        table[0] = 1.0;
        std::vector<std::vector<double>> C(N + 2, std::vector<double>(N + 2, 0.0));
        for (int i = 0; i <= N + 1; ++i) {
            C[i][0] = 1.0;
            for (int j = 1; j <= i; ++j)
                C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0.0);
        }
        for (int m = 1; m <= N; ++m) {
            double s = 0.0;
            for (int k = 0; k < m; ++k) s += C[m + 1][k] * table[k];
            table[m] = -s / C[m + 1][m];
        }
    }
    if (n >= static_cast<int>(table.size()))
        throw std::invalid_argument("bernoulli_number: n too large");
    return table[n];
}

cplx bernoulli_poly(int n, cplx x) {
    if (n < 0 || n > 60) throw std::invalid_argument("bernoulli_poly: order");
    // B_n(x) = sum_k C(n,k) B_k x^{n-k}
    cplx s = 0.0;
    double c = 1.0;  // C(n,k)
    for (int k = 0; k <= n; ++k) {
        s += c * bernoulli_number(k) * std::pow(x, static_cast<double>(n - k));
        c = c * (n - k) / (k + 1.0);
    }
    return s;
}

// ---------------------------------------------------------------------------
// zeta / Hurwitz zeta via Euler-Maclaurin
// ---------------------------------------------------------------------------
namespace {
cplx hurwitz_em(cplx s, double a) {
    // sum_{n=0}^{N-1} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
    //   + sum_k B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1}
    // N grows with |Im s| for the correction series to converge, but is kept
    // small otherwise: the head cancels like N^{1-Re s} for Re s < 0.
    const double abs_im = std::abs(s.imag());
    int N = static_cast<int>(std::max(s.real() < 0.0 ? 10.0 : 16.0, 0.6 * abs_im + 12.0));
    const int K = 28;
    KahanSumC head;
    for (int n = 0; n < N; ++n) head.add(std::exp(-s * std::log(n + a)));
    double Na = N + a;
    cplx lNa = std::log(Na);
    cplx tail = std::exp((1.0 - s) * lNa) / (s - 1.0) + 0.5 * std::exp(-s * lNa);
    cplx poch = s;  // (s)_1
    cplx p = std::exp((-s - 1.0) * lNa);
    cplx corr = 0.0;
    double fact = 2.0;  // (2k)!
    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= K; ++k) {
        cplx term = bernoulli_number(2 * k) / fact * poch * p;
        double mag = std::abs(term);
        if (mag > prev) break;  // asymptotic turn; stop at the smallest term
        corr += term;
        prev = mag;
        if (mag < 1e-18 * std::abs(corr) + 1e-300) break;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        fact *= (2.0 * k + 1) * (2.0 * k + 2);
        p /= Na * Na;
    }
    return head.value() + tail + corr;
}
} // namespace

cplx zeta(cplx s) {
    if (std::abs(s - 1.0) < 1e-12) throw std::domain_error("zeta: pole at s = 1");
    if (s.real() < -12.0) {
        // functional equation for the far-left region
        cplx one_m = 1.0 - s;
        return std::pow(2.0, s) * std::pow(PI, s - 1.0) * std::sin(0.5 * PI * s) *
               cgamma(one_m) * zeta(one_m);
    }
    return hurwitz_em(s, 1.0);
}

cplx hurwitz_zeta(cplx s, double a) {
    if (!(a > 0.0)) throw std::invalid_argument("hurwitz_zeta: a must be > 0");
    if (std::abs(s - 1.0) < 1e-12) throw std::domain_error("hurwitz_zeta: pole at s = 1");
    return hurwitz_em(s, a);
}

// ---------------------------------------------------------------------------
// incomplete gamma, erfcx
// ---------------------------------------------------------------------------
cplx upper_gamma(cplx a, double x) {
    if (x <= 0.0) throw std::invalid_argument("upper_gamma: x must be > 0");
    if (x > std::abs(a) + 6.0) {
        // continued fraction (Lentz)
        cplx b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
        for (int i = 1; i <= 400; ++i) {
            cplx an = -static_cast<double>(i) * (static_cast<double>(i) - a);
            b += 2.0;
            d = an * d + b;
            if (std::abs(d) < 1e-290) d = 1e-290;
            c = b + an / c;
            if (std::abs(c) < 1e-290) c = 1e-290;
            d = 1.0 / d;
            cplx del = d * c;
            h *= del;
            if (std::abs(del - 1.0) < 1e-16) break;
        }
        return std::exp(-x + a * std::log(x)) * h;
    }
    // series for the lower function, subtract
    cplx ap = a, sum = 1.0 / a, del = sum;
    for (int i = 1; i <= 500; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < 1e-17 * std::abs(sum)) break;
    }
    cplx lower = sum * std::exp(-x + a * std::log(x));
    return cgamma(a) - lower;
}

double erfcx(double x) {
    if (x < 0.0) throw std::invalid_argument("erfcx: x < 0");
    if (x < 12.0) return std::exp(x * x) * std::erfc(x);
    // asymptotic: erfcx(x) ~ 1/(x sqrt(pi)) (1 - 1/(2x^2) + 3/(4x^4) - ...)
    double inv2 = 1.0 / (x * x);
    double s = 1.0, term = 1.0;
    for (int k = 1; k <= 8; ++k) {
        term *= -(2.0 * k - 1.0) * 0.5 * inv2;
        s += term;
    }
    return s / (x * SQRT_PI);
}

} // namespace kuzver::special
