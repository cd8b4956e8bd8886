#ifndef KUZVER_NTHEORY_HPP
#define KUZVER_NTHEORY_HPP

// Exact integer/rational number theory: divisor sums, Kloosterman sums,
// weight-12 cusp form coefficients, cusp-form dimensions, Hecke
// multiplicativity.  All residue arithmetic is done in 64/128-bit integers;
// nothing here can silently overflow on the supported ranges.

#include "kuzver/numeric.hpp"
#include <string>

namespace kuzver::ntheory {

struct KloostermanQuery {
    long long n;  // >= 1
    long long m;  // any sign
    long long c;  // >= 1
};

long long gcd_ll(long long a, long long b);
// modular inverse of a mod c (gcd(a,c)=1), via extended gcd
long long inv_mod(long long a, long long c);
int divisor_count(long long c);
std::vector<long long> divisors(long long n);
// prime factorization (p, e) pairs; trial division with a cached prime list.
std::vector<std::pair<long long, int>> factorize(long long n, long long bound = 1000000);

// tau_s(n) = sum_{d|n} (n/d^2)^{s-1/2}; symmetric under s -> 1-s.
cplx tau_div(long long n, cplx s);

// S(n,m;c) by direct summation over residues; exact cosine pairing a ~ c-a
// keeps the result real by construction.
double kloosterman(const KloostermanQuery& q);
// twisted multiplicativity over coprime factors of c, brute force at prime
// powers; matches kloosterman to ~1e-9 absolute.
double kloosterman_fast(const KloostermanQuery& q);

// all S(n,m;c) for n,m in [1,nmax] at one modulus via a shared inverse table;
// result indexed [n-1][m-1].  Used by the exhaustive oracle check.
std::vector<std::vector<double>> kloosterman_table(long long c, int nmax);

double weil_bound(const KloostermanQuery& q);

struct TauTable {
    std::vector<int128> coeff;  // coeff[i] = tau(i+1)
    long long n_max() const { return static_cast<long long>(coeff.size()); }
    int128 tau(long long n) const;
    double tau_normalized(long long n) const;  // tau(n) / n^{11/2}
    // exact check of tau(n) tau(m) = sum_{d | (n,m)} d^11 tau(nm/d^2)
    bool hecke_exact(long long n, long long m) const;
};

// coefficients of q prod_{k>=1} (1-q^k)^24 up to q^N, exact
TauTable ramanujan_tau(long long N);

// dim of the cusp form space of even weight k (full modular group)
int cusp_dim(int k);

// t(n) t(m) - sum_{d | (n,m)} t(nm/d^2) for a 1-based eigenvalue sequence
double hecke_product_check(const std::vector<double>& t, long long n, long long m);

std::string int128_to_string(int128 v);

} // namespace kuzver::ntheory

#endif
