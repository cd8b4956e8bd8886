#include "kuzver/quadrature.hpp"

#include <map>
#include <mutex>

namespace kuzver {

static GLRule make_gl(int n) {
    GLRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Tricomi initial guess, then Newton on P_n.
        double x = std::cos(PI * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int iter = 0; iter < 100; ++iter) {
            p0 = 1.0; p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1; p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        p0 = 1.0; p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1; p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

const GLRule& gl_rule(int n) {
    static std::map<int, GLRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_gl(n)).first;
    return it->second;
}

static cplx gl_apply(const std::function<cplx(double)>& f, double a, double b, int n,
                     int* evals) {
    const GLRule& r = gl_rule(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    KahanSumC s;
    for (int i = 0; i < n; ++i) s.add(f(mid + half * r.x[i]) * r.w[i]);
    *evals += n;
    return s.value() * half;
}

namespace {
struct AdaptState {
    const std::function<cplx(double)>* f;
    double rel_tol, abs_tol;
    int evals = 0;
    double err = 0.0;
};

cplx adapt_rec(AdaptState& st, double a, double b, cplx coarse, int depth, int max_depth) {
    double m = 0.5 * (a + b);
    cplx left = gl_apply(*st.f, a, m, 12, &st.evals);
    cplx right = gl_apply(*st.f, m, b, 12, &st.evals);
    cplx fine = left + right;
    double err = std::abs(fine - coarse);
    if (depth >= max_depth ||
        err <= st.abs_tol || err <= st.rel_tol * std::abs(fine)) {
        st.err += err;
        return fine;
    }
    return adapt_rec(st, a, m, left, depth + 1, max_depth) +
           adapt_rec(st, m, b, right, depth + 1, max_depth);
}
} // namespace

QuadResult integrate_gl(const std::function<cplx(double)>& f, double a, double b,
                        double rel_tol, double abs_tol, int max_depth) {
    AdaptState st;
    st.f = &f;
    st.rel_tol = rel_tol;
    st.abs_tol = abs_tol;
    cplx coarse = gl_apply(f, a, b, 12, &st.evals);
    cplx v = adapt_rec(st, a, b, coarse, 0, max_depth);
    return {v, st.err, st.evals};
}

QuadResult integrate_tanh_sinh(const std::function<cplx(double)>& f, double a, double b,
                               double tol, int max_level) {
    // x = mid + half*tanh(pi/2 sinh t); integrate over t with the trapezoid rule,
    // doubling the level until converged.  Nodes near the endpoints are formed
    // from the distance to the endpoint so 1/sqrt(x - a) style integrands keep
    // full relative accuracy.
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const double tmax = 3.8;  // weights below ~1e-17 past this point
    auto node = [&](double t, double& x, double& w) {
        double st = std::sinh(t);
        double y = 0.5 * PI * st;
        double c = std::cosh(y);
        if (t > 1.0) {              // distance to b: half * 2/(1+e^{2y})
            x = b - half * 2.0 / (1.0 + std::exp(2.0 * y));
        } else if (t < -1.0) {      // distance to a
            x = a + half * 2.0 / (1.0 + std::exp(-2.0 * y));
        } else {
            x = mid + half * std::tanh(y);
        }
        w = half * 0.5 * PI * std::cosh(t) / (c * c);
    };
    double h = tmax;
    double x, w;
    node(0.0, x, w);
    KahanSumC sum;
    sum.add(f(x) * w);
    int evals = 1;
    cplx prev = sum.value() * h;
    double err = std::numeric_limits<double>::max();
    for (int level = 1; level <= max_level; ++level) {
        h *= 0.5;
        // new nodes at odd multiples of h
        for (double t = h; t <= tmax; t += 2.0 * h) {
            for (double sgn : {1.0, -1.0}) {
                node(sgn * t, x, w);
                if (w < 1e-300) continue;
                if (x <= a || x >= b) continue;
                cplx fx = f(x);
                if (!is_finite(fx)) continue;  // integrable endpoint blowup
                sum.add(fx * w);
                ++evals;
            }
        }
        cplx cur = sum.value() * h;
        err = std::abs(cur - prev);
        prev = cur;
        if (level >= 4 && (err <= tol * std::max(1.0, std::abs(cur)) || err <= 1e-305))
            break;
    }
    return {prev, err, evals};
}

QuadResult integrate_to_inf(const std::function<cplx(double)>& f, double a,
                            double rel_tol, double abs_tol,
                            double first_panel, int max_panels) {
    KahanSumC total;
    double err = 0.0;
    int evals = 0;
    double left = a, width = first_panel;
    for (int p = 0; p < max_panels; ++p) {
        QuadResult q = integrate_gl(f, left, left + width, rel_tol, abs_tol, 10);
        total.add(q.value);
        err += q.error_estimate;
        evals += q.evaluations;
        left += width;
        if (p >= 2) {
            double scale = std::max(1.0, std::abs(total.value()));
            if (std::abs(q.value) < 0.25 * std::max(abs_tol, rel_tol * scale))
                break;
        }
        if (p >= 1) width *= 1.6;
    }
    return {total.value(), err, evals};
}

cplx contour_circle(const std::function<cplx(cplx)>& f, cplx center, double radius, int n) {
    KahanSumC s;
    for (int k = 0; k < n; ++k) {
        double th = TWO_PI * k / n;
        cplx z = center + radius * cplx(std::cos(th), std::sin(th));
        // f(z) * dz/dtheta / (2 pi i) with dz = i * radius * e^{i th} dtheta
        s.add(f(z) * radius * cplx(std::cos(th), std::sin(th)));
    }
    return s.value() / static_cast<double>(n);
}

cplx oscillatory_tail(cplx lambda, double omega, double X, int max_terms) {
    // Repeated integration by parts:
    //   \int_X^\infty x^l e^{iwx} dx = e^{iwX} \sum_k c_k,
    //   c_0 = -X^l/(iw), c_{k+1} = -c_k (l-k)/(iw X).
    if (omega == 0.0) throw std::invalid_argument("oscillatory_tail: omega = 0");
    cplx iw(0.0, omega);
    cplx xl = std::exp(lambda * std::log(X));
    cplx term = -xl / iw;
    cplx sum = term;
    double last = std::abs(term);
    for (int k = 0; k < max_terms; ++k) {
        term *= -(lambda - static_cast<double>(k)) / (iw * X);
        double mag = std::abs(term);
        if (mag > last) break;  // asymptotic series turned
        sum += term;
        last = mag;
        if (mag < 1e-18 * std::abs(sum)) break;
    }
    return std::exp(cplx(0.0, omega * X)) * sum;
}

} // namespace kuzver
