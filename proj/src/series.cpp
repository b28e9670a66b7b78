#include "rslab/series.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace rslab::series {

int dim_cusp(int k) {
    if (k < 12 || k % 2 != 0) return 0;
    int dm = (k % 12 == 2) ? k / 12 : k / 12 + 1;  // dim M_k
    return dm - 1;
}

void eisenstein_monomial_exponents(int w, int& a, int& b) {
    if (w < 0 || w % 2 != 0 || w == 2) throw std::invalid_argument("no Eisenstein monomial of that weight");
    if (w % 4 == 0) {
        a = w / 4;
        b = 0;
    } else {
        a = (w - 6) / 4;
        b = 1;
    }
}

// ======================= exact GMP series ================================

ZSeries eisenstein_z(int weight, int n) {
    if (weight != 4 && weight != 6) throw std::invalid_argument("eisenstein_z: weight must be 4 or 6");
    ZSeries e(n + 1);
    // sigma_{weight-1} sieve
    for (int d = 1; d <= n; ++d) {
        mpz_class dk;
        mpz_ui_pow_ui(dk.get_mpz_t(), d, weight - 1);
        for (int m = d; m <= n; m += d) e[m] += dk;
    }
    mpz_class c = (weight == 4) ? 240 : -504;
    for (int m = 1; m <= n; ++m) e[m] *= c;
    e[0] = 1;
    return e;
}

ZSeries multiply_z(const ZSeries& a, const ZSeries& b, int n) {
    ZSeries c(n + 1);
    int alen = std::min<int>(a.size() - 1, n);
    for (int i = 0; i <= alen; ++i) {
        if (a[i] == 0) continue;
        int jmax = std::min<int>(b.size() - 1, n - i);
        for (int j = 0; j <= jmax; ++j) {
            if (b[j] != 0) c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

ZSeries power_z(const ZSeries& a, int e, int n) {
    ZSeries r(1, mpz_class(1));
    ZSeries base = a;
    while (e > 0) {
        if (e & 1) r = multiply_z(r, base, n);
        e >>= 1;
        if (e) base = multiply_z(base, base, n);
    }
    return r;
}

ZSeries delta_z(int n) {
    // eta(q)^3 = sum_k (-1)^k (2k+1) q^{k(k+1)/2}; Delta = q (eta^3)^8
    ZSeries e3(n + 1);
    for (int64_t k = 0;; ++k) {
        int64_t pos = k * (k + 1) / 2;
        if (pos > n) break;
        e3[pos] = (k % 2 == 0) ? (2 * k + 1) : -(2 * k + 1);
    }
    ZSeries e6 = multiply_z(e3, e3, n);
    ZSeries e12 = multiply_z(e6, e6, n);
    ZSeries e24 = multiply_z(e12, e12, n);
    ZSeries d(n + 1);
    for (int m = 1; m <= n; ++m) d[m] = e24[m - 1];
    return d;
}

std::vector<ZSeries> victor_miller_z(int k, int n) {
    if (k < 12 || k % 2 != 0) throw std::invalid_argument("victor_miller_z: need even k >= 12");
    int d = dim_cusp(k);
    if (d == 0) return {};
    if (n < d + 1) throw std::invalid_argument("victor_miller_z: n_max too small to echelonize");
    ZSeries e4 = eisenstein_z(4, n);
    ZSeries e6 = eisenstein_z(6, n);
    ZSeries delta = delta_z(n);
    std::vector<ZSeries> f(d);
    ZSeries dpow = delta;
    for (int i = 1; i <= d; ++i) {
        int a, b;
        eisenstein_monomial_exponents(k - 12 * i, a, b);
        ZSeries mono = power_z(e4, a, n);
        if (b) mono = multiply_z(mono, power_z(e6, b, n), n);
        f[i - 1] = multiply_z(dpow, mono, n);
        if (i < d) dpow = multiply_z(dpow, delta, n);
    }
    // echelonize: f[i] = q^{i+1} + O(q^{d+1}); leading coefficients are 1
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            mpz_class c = f[i][j + 1];
            if (c == 0) continue;
            for (int m = j + 1; m <= n; ++m) f[i][m] -= c * f[j][m];
        }
    }
    return f;
}

// ======================= NTT over 62-bit primes ==========================

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

// Montgomery arithmetic mod p < 2^62
struct Mont {
    u64 p, ninv, r2;
    explicit Mont(u64 prime) : p(prime) {
        ninv = 1;
        for (int i = 0; i < 6; ++i) ninv *= 2 - p * ninv;  // p * ninv = 1 mod 2^64
        ninv = ~ninv + 1;                                  // -p^{-1} mod 2^64
        u128 r = (u128(1) << 64) % p;
        r2 = (u64)((u128)r * r % p);
    }
    inline u64 redc(u128 t) const {
        u64 m = (u64)t * ninv;
        u128 s = t + (u128)m * p;
        u64 r = (u64)(s >> 64);
        return r >= p ? r - p : r;
    }
    inline u64 mul(u64 a, u64 b) const { return redc((u128)a * b); }
    inline u64 to(u64 a) const { return mul(a % p, r2); }
    inline u64 from(u64 a) const { return redc(a); }
    inline u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    inline u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
};

constexpr int kTwoAdicFwd = 24;

// iterative NTT, values in Montgomery form, length = power of two.
// g24 is an element of order 2^kTwoAdicFwd.
void ntt_core(std::vector<u64>& a, const Mont& mo, u64 g24, bool invert) {
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        u64 wl = powmod(g24, (1ull << kTwoAdicFwd) / len, mo.p);
        if (invert) wl = powmod(wl, mo.p - 2, mo.p);
        u64 wl_m = mo.to(wl);
        for (size_t i = 0; i < n; i += len) {
            u64 w = mo.to(1);
            for (size_t j = 0; j < len / 2; ++j) {
                u64 u = a[i + j];
                u64 v = mo.mul(a[i + j + len / 2], w);
                a[i + j] = mo.add(u, v);
                a[i + j + len / 2] = mo.sub(u, v);
                w = mo.mul(w, wl_m);
            }
        }
    }
    if (invert) {
        u64 ninv = mo.to(powmod(n % mo.p, mo.p - 2, mo.p));
        for (auto& x : a) x = mo.mul(x, ninv);
    }
}

std::mutex g_primes_mx;
std::vector<NttPrime> g_primes;

constexpr int kTwoAdic = 24;  // supports transforms up to 2^24

}  // namespace

std::vector<NttPrime> ntt_primes(int count) {
    std::lock_guard lk(g_primes_mx);
    static u64 next_c = (1ull << 38) - 1;  // p = c 2^24 + 1 < 2^62
    while ((int)g_primes.size() < count) {
        u64 p = (next_c << kTwoAdic) + 1;
        if (miller_rabin(p)) {
            // element of order 2^kTwoAdic: x^{(p-1)/2^24} works whenever the
            // half-order power is not 1
            u64 g = 0;
            for (u64 x = 2; x < 200; ++x) {
                u64 y = powmod(x, (p - 1) >> kTwoAdic, p);
                if (powmod(y, 1ull << (kTwoAdic - 1), p) != 1) {
                    g = y;
                    break;
                }
            }
            if (g != 0) g_primes.push_back({p, g});
        }
        if (next_c < 4) throw std::runtime_error("ntt_primes: search exhausted");
        --next_c;
    }
    return {g_primes.begin(), g_primes.begin() + count};
}

void ntt_multiply_mod(std::vector<u64>& a, std::vector<u64> b, u64 p, u64 g, int64_t out_len) {
    Mont mo(p);
    size_t need = a.size() + b.size() - 1;
    size_t L = 1;
    while (L < need) L <<= 1;
    std::vector<u64> fa(L, 0), fb(L, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = mo.to(a[i]);
    for (size_t i = 0; i < b.size(); ++i) fb[i] = mo.to(b[i]);
    ntt_core(fa, mo, g, false);
    ntt_core(fb, mo, g, false);
    for (size_t i = 0; i < L; ++i) fa[i] = mo.mul(fa[i], fb[i]);
    ntt_core(fa, mo, g, true);
    a.assign(out_len + 1, 0);
    for (int64_t i = 0; i <= out_len && i < (int64_t)L; ++i) a[i] = mo.from(fa[i]);
}

namespace {

// mod-p series helpers (plain residues, not Montgomery)
using MSeries = std::vector<u64>;

MSeries eisenstein_mod(int weight, int64_t n, u64 p) {
    MSeries e(n + 1, 0);
    for (int64_t d = 1; d <= n; ++d) {
        u64 dk;
        if (weight == 4) {
            u64 d3 = (u64)d * d % p;
            d3 = (u64)((u128)d3 * d % p);
            dk = d3;
        } else {
            u64 d2 = (u64)((u128)d * d % p);
            u64 d4 = (u64)((u128)d2 * d2 % p);
            dk = (u64)((u128)d4 * d % p);
        }
        for (int64_t m = d; m <= n; m += d) {
            e[m] += dk;
            if (e[m] >= p) e[m] -= p;
        }
    }
    u64 c = (weight == 4) ? 240 % p : p - 504 % p;
    for (int64_t m = 1; m <= n; ++m) e[m] = (u64)((u128)e[m] * c % p);
    e[0] = 1;
    return e;
}

MSeries delta_mod(int64_t n, u64 p, u64 g) {
    MSeries e3(n + 1, 0);
    for (int64_t k = 0;; ++k) {
        int64_t pos = k * (k + 1) / 2;
        if (pos > n) break;
        u64 v = (u64)(2 * k + 1) % p;
        e3[pos] = (k % 2 == 0) ? v : p - v;
    }
    MSeries cur = e3;
    ntt_multiply_mod(cur, cur, p, g, n);  // eta^6
    ntt_multiply_mod(cur, cur, p, g, n);  // eta^12
    ntt_multiply_mod(cur, cur, p, g, n);  // eta^24
    MSeries d(n + 1, 0);
    for (int64_t m = 1; m <= n; ++m) d[m] = cur[m - 1];
    return d;
}

MSeries power_mod_series(const MSeries& a, int e, int64_t n, u64 p, u64 g) {
    MSeries r(1, 1);
    MSeries base = a;
    while (e > 0) {
        if (e & 1) ntt_multiply_mod(r, base, p, g, n);
        e >>= 1;
        if (e) {
            MSeries b2 = base;
            ntt_multiply_mod(base, b2, p, g, n);
        }
    }
    if ((int64_t)r.size() < n + 1) r.resize(n + 1, 0);
    return r;
}

}  // namespace

std::vector<std::vector<double>> victor_miller_long(int k, int64_t n) {
    int d = dim_cusp(k);
    if (d == 0) return {};
    if (n < d + 1) throw std::invalid_argument("victor_miller_long: n too small");
    // enough primes for |a_i(m)| <= C d(m) m^{(k-1)/2}; ~62 bits per prime
    double bits = 0.5 * (k - 1) * std::log2((double)std::max<int64_t>(n, 2)) + 64.0;
    int np = std::max(2, (int)std::ceil(bits / 61.0));
    auto primes = ntt_primes(np);

    // residues[ip][i][m]
    std::vector<std::vector<MSeries>> residues(np);
    for (int ip = 0; ip < np; ++ip) {
        u64 p = primes[ip].p, g = primes[ip].g;
        MSeries e4 = eisenstein_mod(4, n, p);
        MSeries e6 = eisenstein_mod(6, n, p);
        MSeries delta = delta_mod(n, p, g);
        std::vector<MSeries> f(d);
        MSeries dpow = delta;
        for (int i = 1; i <= d; ++i) {
            int ea, eb;
            eisenstein_monomial_exponents(k - 12 * i, ea, eb);
            MSeries mono = power_mod_series(e4, ea, n, p, g);
            if (eb) {
                MSeries e6b = power_mod_series(e6, eb, n, p, g);
                ntt_multiply_mod(mono, e6b, p, g, n);
            }
            f[i - 1] = dpow;
            ntt_multiply_mod(f[i - 1], mono, p, g, n);
            if (i < d) ntt_multiply_mod(dpow, delta, p, g, n);
        }
        // echelonize mod p
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                u64 c = f[i][j + 1];
                if (c == 0) continue;
                const MSeries& fj = f[j];
                MSeries& fi = f[i];
                for (int64_t m = j + 1; m <= n; ++m) {
                    u64 sub = (u64)((u128)c * fj[m] % p);
                    fi[m] = fi[m] >= sub ? fi[m] - sub : fi[m] + p - sub;
                }
            }
        }
        residues[ip] = std::move(f);
    }

    // Garner CRT -> long double -> double (signed residues around 0)
    std::vector<long double> prefix(np);  // prefix[j] = p_0 ... p_{j-1}
    prefix[0] = 1.0L;
    for (int j = 1; j < np; ++j) prefix[j] = prefix[j - 1] * (long double)primes[j - 1].p;
    long double Pfull = prefix[np - 1] * (long double)primes[np - 1].p;
    // inverses inv[j] = (p_0...p_{j-1})^{-1} mod p_j
    std::vector<u64> invpp(np, 1);
    for (int j = 1; j < np; ++j) {
        u64 pr = 1;
        for (int i = 0; i < j; ++i) pr = mulmod(pr, primes[i].p % primes[j].p, primes[j].p);
        invpp[j] = powmod(pr, primes[j].p - 2, primes[j].p);
    }
    (void)Pfull;
    std::vector<std::vector<double>> out(d, std::vector<double>(n + 1, 0.0));
    std::vector<u64> digits(np), rr(np);
    auto garner = [&](const std::vector<u64>& r) {
        for (int j = 0; j < np; ++j) {
            u64 pj = primes[j].p;
            u64 acc = 0, mul = 1;
            for (int t = 0; t < j; ++t) {
                acc = (acc + (u64)((u128)(digits[t] % pj) * mul % pj)) % pj;
                mul = mulmod(mul, primes[t].p % pj, pj);
            }
            u64 rj = r[j] % pj;
            u64 diff = rj >= acc ? rj - acc : rj + pj - acc;
            digits[j] = mulmod(diff, invpp[j], pj);
        }
        long double v = 0.0L;
        for (int j = 0; j < np; ++j) v += (long double)digits[j] * prefix[j];
        return v;
    };
    for (int i = 0; i < d; ++i) {
        for (int64_t m = 0; m <= n; ++m) {
            for (int j = 0; j < np; ++j) rr[j] = residues[j][i][m];
            long double v = garner(rr);
            // negative values sit near the top of the CRT range; rebuild the
            // negation digit-wise to dodge the cancellation in v - P
            if (digits[np - 1] > primes[np - 1].p / 2) {
                for (int j = 0; j < np; ++j) rr[j] = rr[j] == 0 ? 0 : primes[j].p - rr[j];
                v = -garner(rr);
            }
            out[i][m] = (double)v;
        }
    }
    return out;
}

}  // namespace rslab::series
