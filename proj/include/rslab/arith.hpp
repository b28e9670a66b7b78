#pragma once
// Exact integer arithmetic for exponential sums: Kloosterman sums,
// Ramanujan sums, and the multiplicative helpers (tau, phi, mu) they need.

#include <cstdint>
#include <vector>

namespace rslab::arith {

using std::int64_t;

// d*dbar == 1 (mod c).  c >= 1, gcd(d,c) must be 1.
int64_t inv_mod(int64_t d, int64_t c);

int64_t gcd3(int64_t a, int64_t b, int64_t c);

// prime factorization by trial division, cached for reuse
struct Factor { int64_t p; int e; };
std::vector<Factor> factorize(int64_t n);

int64_t divisor_count(int64_t n);   // tau(n)
int64_t euler_phi(int64_t n);
int     mobius(int64_t n);

// S(m,n;c) = sum_{d dbar = 1 mod c} e((m d + n dbar)/c).
// The pairing d <-> dbar makes the sum real; computed by direct O(c)
// summation with the argument reduced mod c before hitting cos().
// Small-c values are cached (the trace formula reuses them heavily).
double kloosterman(int64_t m, int64_t n, int64_t c);

// C_c(q) = sum_{d | (c,q)} mu(c/d) d   (q >= 0, c >= 1)
int64_t ramanujan_sum(int64_t q, int64_t c);

// the defining character sum, kept as an independent route for tests
double ramanujan_sum_direct(int64_t q, int64_t c);

// tau(c) sqrt(c) gcd(m,n,c)^{1/2} - |S(m,n;c)|, always >= 0 (Weil)
double weil_bound_margin(int64_t m, int64_t n, int64_t c);

void clear_caches();

}  // namespace rslab::arith
