#include "kuzver/ntheory.hpp"

#include <algorithm>
#include <numeric>

namespace kuzver::ntheory {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

long long inv_mod(long long a, long long c) {
    long long t = 0, newt = 1, r = c, newr = ((a % c) + c) % c;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return t < 0 ? t + c : t;
}

static const std::vector<int>& small_primes() {
    static std::vector<int> primes = [] {
        std::vector<int> out;
        const int N = 1024;
        std::vector<bool> sieve(N + 1, true);
        for (int p = 2; p <= N; ++p) {
            if (!sieve[p]) continue;
            out.push_back(p);
            for (int q = 2 * p; q <= N; q += p) sieve[q] = false;
        }
        return out;
    }();
    return primes;
}

std::vector<std::pair<long long, int>> factorize(long long n, long long bound) {
    if (n < 1) throw std::invalid_argument("factorize: n < 1");
    if (n > bound)
        throw std::invalid_argument("factorize: n exceeds configured bound");
    std::vector<std::pair<long long, int>> out;
    for (int p : small_primes()) {
        if (static_cast<long long>(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    // whatever survived the small-prime cache: trial divide odd numbers
    long long d = small_primes().back() + 2;
    while (d * d <= n) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
        d += 2;
    }
    if (n > 1) out.emplace_back(n, 1);
    std::sort(out.begin(), out.end());
    return out;
}

int divisor_count(long long c) {
    int d = 1;
    for (auto& [p, e] : factorize(c)) d *= (e + 1);
    return d;
}

std::vector<long long> divisors(long long n) {
    std::vector<long long> out{1};
    for (auto& [p, e] : factorize(n)) {
        size_t sz = out.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

cplx tau_div(long long n, cplx s) {
    if (n < 1) throw std::invalid_argument("tau_div: n < 1");
    cplx e = s - 0.5;
    KahanSumC sum;
    for (long long d : divisors(n)) {
        double ratio = static_cast<double>(n) / (static_cast<double>(d) * d);
        sum.add(std::exp(e * std::log(ratio)));
    }
    return sum.value();
}

double kloosterman(const KloostermanQuery& q) {
    if (q.c < 1 || q.n < 1) throw std::invalid_argument("kloosterman: need c,n >= 1");
    const long long c = q.c;
    if (c == 1) return 1.0;
    long long n = ((q.n % c) + c) % c, m = ((q.m % c) + c) % c;
    KahanSum s;
    // pair a with c-a: the terms are conjugate, so each pair adds 2 cos
    for (long long a = 1; 2 * a <= c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        long long d = inv_mod(a, c);
        long long k = (n * a + m * d) % c;
        double term = std::cos(TWO_PI * static_cast<double>(k) / static_cast<double>(c));
        if (2 * a == c) s.add(term);  // self-paired residue (only c = 2)
        else s.add(2.0 * term);
    }
    return s.value();
}

std::vector<std::vector<double>> kloosterman_table(long long c, int nmax) {
    std::vector<std::vector<double>> out(nmax, std::vector<double>(nmax, 0.0));
    if (c == 1) {
        for (auto& row : out) std::fill(row.begin(), row.end(), 1.0);
        return out;
    }
    std::vector<double> ctab(c);
    for (long long k = 0; k < c; ++k) ctab[k] = std::cos(TWO_PI * k / static_cast<double>(c));
    for (long long a = 1; 2 * a <= c; ++a) {
        if (std::gcd(a, c) != 1) continue;
        long long d = inv_mod(a, c);
        double w = (2 * a == c) ? 1.0 : 2.0;
        for (int n = 1; n <= nmax; ++n) {
            long long na = (static_cast<long long>(n) * a) % c;
            long long md = 0;
            for (int m = 1; m <= nmax; ++m) {
                md += d;
                if (md >= c) md -= c;
                long long k = na + md;
                if (k >= c) k -= c;
                out[n - 1][m - 1] += w * ctab[k];
            }
        }
    }
    return out;
}

double kloosterman_fast(const KloostermanQuery& q) {
    if (q.c < 1 || q.n < 1) throw std::invalid_argument("kloosterman_fast: need c,n >= 1");
    auto factors = factorize(q.c);
    // S(n,m; c1 c2) = S(A n, A m; c1) S(B n, B m; c2) for coprime c1, c2,
    // with A = c2^{-1} mod c1 and B = c1^{-1} mod c2.
    double result = 1.0;
    long long c = q.c;
    for (auto& [p, e] : factors) {
        long long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        long long rest = c / pe;
        long long A = (pe == 1) ? 0 : ((rest % pe == 0) ? 1 : inv_mod(rest % pe, pe));
        long long nn = ((q.n % pe) * A) % pe;
        long long mm = ((((q.m % pe) + pe) % pe) * A) % pe;
        if (nn == 0) nn = pe;  // representative in [1, pe] for the n >= 1 contract
        KloostermanQuery local{nn, mm, pe};
        result *= kloosterman(local);
    }
    return result;
}

double weil_bound(const KloostermanQuery& q) {
    long long g = std::gcd(std::gcd(q.n, std::abs(q.m)), q.c);
    if (g == 0) g = q.c;
    return divisor_count(q.c) * std::sqrt(static_cast<double>(q.c)) *
           std::sqrt(static_cast<double>(g));
}

// ---------------------------------------------------------------------------
// Ramanujan tau via the eta product
// ---------------------------------------------------------------------------
namespace {
// coefficients of prod_{k>=1} (1-q^k) up to q^N (pentagonal number theorem)
std::vector<int128> euler_product(long long N) {
    std::vector<int128> e(N + 1, 0);
    e[0] = 1;
    for (long long j = 1;; ++j) {
        long long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (g1 > N && g2 > N) break;
        int sign = (j % 2 == 0) ? 1 : -1;
        if (g1 <= N) e[g1] += sign;
        if (g2 <= N) e[g2] += sign;
    }
    return e;
}

std::vector<int128> poly_mul(const std::vector<int128>& a, const std::vector<int128>& b,
                             long long N) {
    std::vector<int128> out(N + 1, 0);
    for (long long i = 0; i <= N && i < static_cast<long long>(a.size()); ++i) {
        if (a[i] == 0) continue;
        int128 ai = a[i];
        long long jmax = std::min<long long>(N - i, static_cast<long long>(b.size()) - 1);
        for (long long j = 0; j <= jmax; ++j) out[i + j] += ai * b[j];
    }
    return out;
}
} // namespace

TauTable ramanujan_tau(long long N) {
    if (N < 1) throw std::invalid_argument("ramanujan_tau: N < 1");
    long long M = N - 1;  // tau(n) = [q^{n-1}] prod (1-q^k)^24
    auto e1 = euler_product(M);
    auto e2 = poly_mul(e1, e1, M);
    auto e4 = poly_mul(e2, e2, M);
    auto e8 = poly_mul(e4, e4, M);
    auto e16 = poly_mul(e8, e8, M);
    auto e24 = poly_mul(e16, e8, M);
    TauTable t;
    t.coeff.assign(e24.begin(), e24.end());
    return t;
}

int128 TauTable::tau(long long n) const {
    if (n < 1 || n > n_max()) throw std::out_of_range("TauTable::tau: index");
    return coeff[n - 1];
}

double TauTable::tau_normalized(long long n) const {
    return static_cast<double>(tau(n)) / std::pow(static_cast<double>(n), 5.5);
}

bool TauTable::hecke_exact(long long n, long long m) const {
    int128 lhs = tau(n) * tau(m);
    int128 rhs = 0;
    long long g = std::gcd(n, m);
    for (long long d : divisors(g)) {
        int128 d11 = 1;
        for (int i = 0; i < 11; ++i) d11 *= d;
        rhs += d11 * tau(n * m / (d * d));
    }
    return lhs == rhs;
}

int cusp_dim(int k) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("cusp_dim: k must be even, >= 2");
    int base = k / 12;
    int dim = (k % 12 == 2) ? base - 1 : base;
    return std::max(0, dim);  // k = 2 would otherwise go negative
}

double hecke_product_check(const std::vector<double>& t, long long n, long long m) {
    auto at = [&](long long i) -> double {
        if (i < 1 || i > static_cast<long long>(t.size()))
            throw std::out_of_range("hecke_product_check: sequence too short");
        return t[i - 1];
    };
    double lhs = at(n) * at(m);
    double rhs = 0.0;
    for (long long d : divisors(std::gcd(n, m))) rhs += at(n * m / (d * d));
    return lhs - rhs;
}

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int digit = static_cast<int>(neg ? -(v % 10) : (v % 10));
        s.push_back('0' + digit);
        v /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

} // namespace kuzver::ntheory
