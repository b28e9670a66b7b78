#pragma once
// q-expansion engines.
//
// Two arithmetic backends produce level-1 modular form tables:
//  * exact GMP integer series (Victor-Miller echelon basis) for moderate
//    ranges: ground truth for tests, Hecke data, cache verification;
//  * an NTT/CRT pipeline over 62-bit primes for the long tables the
//    approximate-functional-equation sums need (a few 10^5 coefficients),
//    where floating-point convolution would lose everything to the
//    Eisenstein-vs-cusp cancellation at weights >= 28.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace rslab::series {

using std::int64_t;
using std::uint64_t;

// dim S_k(SL_2(Z)) for even k >= 0
int dim_cusp(int k);

// exponents (a,b) with 4a + 6b = w (minimal b), for even w >= 0, w != 2
void eisenstein_monomial_exponents(int w, int& a, int& b);

// ---- exact integer series (GMP) ----------------------------------------
using ZSeries = std::vector<mpz_class>;  // index = q-exponent, [0, n]

ZSeries eisenstein_z(int weight, int n);              // E4 or E6
ZSeries delta_z(int n);                               // tau(m) at index m
ZSeries multiply_z(const ZSeries& a, const ZSeries& b, int n);
ZSeries power_z(const ZSeries& a, int e, int n);

// echelonized integral basis of S_k to q^n: basis[i] = q^{i+1} + O(q^{d+1}),
// exact integer coefficients.  Throws if n is too small to echelonize.
std::vector<ZSeries> victor_miller_z(int k, int n);

// ---- long tables (NTT mod primes + CRT) ---------------------------------
// echelon cusp basis coefficients as doubles: basis[i][m] = a_i(m),
// m <= n, exact integers rounded to double via CRT over enough primes.
std::vector<std::vector<double>> victor_miller_long(int k, int64_t n);

// struct exposing the modular arithmetic for tests
struct NttPrime {
    uint64_t p;
    uint64_t g;  // generator of the 2-power part
};
std::vector<NttPrime> ntt_primes(int count);
void ntt_multiply_mod(std::vector<uint64_t>& a, std::vector<uint64_t> b, uint64_t p,
                      uint64_t g, int64_t out_len);

}  // namespace rslab::series
