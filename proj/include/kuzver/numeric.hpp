#ifndef KUZVER_NUMERIC_HPP
#define KUZVER_NUMERIC_HPP

// Shared numeric primitives: complex alias, compensated summation,
// double-double arithmetic for cancellation-heavy series, small dense solves.

#include <complex>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kuzver {

using cplx = std::complex<double>;
using int128 = __int128;

inline constexpr double PI = 3.14159265358979323846264338327950288;
inline constexpr double TWO_PI = 2.0 * PI;
inline constexpr double SQRT_PI = 1.77245385090551602729816748334114518;
inline constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;

inline cplx cI() { return cplx(0.0, 1.0); }

inline bool is_finite(const cplx& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Neumaier compensated accumulator.
class KahanSum {
public:
    void add(double x) {
        double t = m_s + x;
        if (std::abs(m_s) >= std::abs(x))
            m_c += (m_s - t) + x;
        else
            m_c += (x - t) + m_s;
        m_s = t;
    }
    double value() const { return m_s + m_c; }
private:
    double m_s = 0.0, m_c = 0.0;
};

class KahanSumC {
public:
    void add(const cplx& z) { m_re.add(z.real()); m_im.add(z.imag()); }
    cplx value() const { return cplx(m_re.value(), m_im.value()); }
private:
    KahanSum m_re, m_im;
};

// ---------------------------------------------------------------------------
// double-double arithmetic (Dekker / Knuth).  Only what the hypergeometric
// series needs: +, -, *, /, conversion.  ~32 significant digits.
// ---------------------------------------------------------------------------
struct dd {
    double hi = 0.0, lo = 0.0;
    dd() = default;
    dd(double h) : hi(h), lo(0.0) {}
    dd(double h, double l) : hi(h), lo(l) {}
    double to_double() const { return hi + lo; }
};

inline dd dd_two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return dd(s, err);
}

inline dd dd_two_prod(double a, double b) {
    double p = a * b;
    double err = std::fma(a, b, -p);
    return dd(p, err);
}

inline dd operator+(const dd& a, const dd& b) {
    dd s = dd_two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    dd r = dd_two_sum(s.hi, lo);
    return r;
}

inline dd operator-(const dd& a, const dd& b) { return a + dd(-b.hi, -b.lo); }

inline dd operator*(const dd& a, const dd& b) {
    dd p = dd_two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_two_sum(p.hi, p.lo);
}

inline dd operator/(const dd& a, const dd& b) {
    double q1 = a.hi / b.hi;
    dd r = a - b * dd(q1);
    double q2 = r.hi / b.hi;
    r = r - b * dd(q2);
    double q3 = r.hi / b.hi;
    dd q = dd_two_sum(q1, q2);
    return q + dd(q3);
}

struct ddc {
    dd re, im;
    ddc() = default;
    ddc(const dd& r, const dd& i) : re(r), im(i) {}
    ddc(const cplx& z) : re(z.real()), im(z.imag()) {}
    ddc(double x) : re(x), im(0.0) {}
    cplx to_cplx() const { return cplx(re.to_double(), im.to_double()); }
};

inline ddc operator+(const ddc& a, const ddc& b) { return ddc(a.re + b.re, a.im + b.im); }
inline ddc operator-(const ddc& a, const ddc& b) { return ddc(a.re - b.re, a.im - b.im); }
inline ddc operator*(const ddc& a, const ddc& b) {
    return ddc(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline ddc operator/(const ddc& a, const ddc& b) {
    dd den = b.re * b.re + b.im * b.im;
    ddc num = a * ddc(b.re, dd(0.0) - b.im);
    return ddc(num.re / den, num.im / den);
}
inline double ddc_abs(const ddc& a) { return std::hypot(a.re.to_double(), a.im.to_double()); }

// ---------------------------------------------------------------------------
// Small dense linear solve, scaled full pivoting.  Sizes stay below ~16.
// ---------------------------------------------------------------------------
inline std::vector<double> solve_full_pivot(std::vector<std::vector<double>> a,
                                            std::vector<double> b,
                                            double* cond_estimate = nullptr) {
    const int n = static_cast<int>(b.size());
    std::vector<int> col_perm(n);
    for (int i = 0; i < n; ++i) col_perm[i] = i;

    // row scaling
    double piv_min = std::numeric_limits<double>::max(), piv_max = 0.0;
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s = std::max(s, std::abs(a[i][j]));
        if (s == 0.0) throw std::runtime_error("solve_full_pivot: zero row");
        for (int j = 0; j < n; ++j) a[i][j] /= s;
        b[i] /= s;
    }
    for (int k = 0; k < n; ++k) {
        int pr = k, pc = k;
        double best = 0.0;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (std::abs(a[i][j]) > best) { best = std::abs(a[i][j]); pr = i; pc = j; }
        if (best == 0.0) throw std::runtime_error("solve_full_pivot: singular system");
        piv_min = std::min(piv_min, best);
        piv_max = std::max(piv_max, best);
        std::swap(a[k], a[pr]);
        std::swap(b[k], b[pr]);
        if (pc != k) {
            for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][pc]);
            std::swap(col_perm[k], col_perm[pc]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<double> y(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int j = i + 1; j < n; ++j) s -= a[i][j] * y[j];
        y[i] = s / a[i][i];
    }
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[col_perm[i]] = y[i];
    if (cond_estimate) *cond_estimate = piv_max / piv_min;
    return x;
}

// Least-squares slope of y against x.
inline double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need >= 2 points");
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) { mx += x[i]; my += y[i]; }
    mx /= x.size(); my /= y.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

} // namespace kuzver

#endif
